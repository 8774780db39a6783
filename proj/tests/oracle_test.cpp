// Copyright 2026 The edgeguard Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "edgeguard/oracle.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <vector>

#include "edgeguard/corpus.hpp"
#include "edgeguard/errors.hpp"
#include "edgeguard/reductions.hpp"
#include "test_graphs.hpp"

namespace edgeguard {
namespace {

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvariantViolated;
}

// Smallest guard set by plain enumeration: sizes ascending, subsets in
// lexicographic order, so the first hit is the lexicographically least.
std::vector<EdgeId> brute_force(const PlaneGraph& g) {
  const auto es = g.edges();
  const int m = static_cast<int>(es.size());
  for (int k = 1; k <= m; ++k) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::vector<EdgeId> pick;
      for (int i : idx) pick.push_back(es[i]);
      if (verify_guard_set(g, pick).guarded) return pick;
      int i = k - 1;
      while (i >= 0 && idx[i] == m - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return {};
}

TEST(Oracle, Triangle) {
  const GuardSet gs = minimum_guard_set(testing::triangle());
  EXPECT_EQ(gs.size(), 1);
  EXPECT_EQ(gs.algorithm, "oracle");
}

TEST(Oracle, DisjointTriangles) {
  for (int k = 1; k <= 8; ++k) {
    EXPECT_EQ(minimum_guard_set(disjoint_triangles(k)).size(), k);
  }
}

TEST(Oracle, FigureNeedsTwo) {
  const PlaneGraph g = figure_no_guard_coloring();
  const GuardSet gs = minimum_guard_set(g);
  EXPECT_EQ(gs.size(), 2);
  EXPECT_TRUE(verify_guard_set(g, gs).guarded);
}

TEST(Oracle, Guardable) {
  EXPECT_TRUE(is_guardable_with(testing::triangle(), 1));
  EXPECT_FALSE(is_guardable_with(disjoint_triangles(2), 1));
  EXPECT_TRUE(is_guardable_with(disjoint_triangles(2), 2));
  EXPECT_TRUE(is_guardable_with(testing::cycle(4), 1));
  EXPECT_FALSE(is_guardable_with(testing::cycle(4), 0));
}

TEST(Oracle, Errors) {
  RotationSystem lonely;
  lonely.n = 3;
  lonely.rotations.resize(3);
  EXPECT_EQ(code_of([&] { minimum_guard_set(PlaneGraph::build(lonely)); }),
            ErrorCode::kInfeasible);
  OracleOptions tight;
  tight.edge_budget = 5;
  EXPECT_EQ(code_of([&] { minimum_guard_set(testing::k4(), {}, tight); }),
            ErrorCode::kBudgetExceeded);
  OracleOptions few_nodes;
  few_nodes.node_budget = 1;
  EXPECT_EQ(code_of([&] {
              minimum_guard_set(platonic("icosahedron"), {}, few_nodes);
            }),
            ErrorCode::kBudgetExceeded);
}

TEST(Oracle, HintDoesNotChangeAnswer) {
  const PlaneGraph g = platonic("dodecahedron");
  const GuardSet plain = minimum_guard_set(g);
  for (int h : {0, 1, plain.size(), plain.size() + 3}) {
    EXPECT_EQ(minimum_guard_set(g, h).edges, plain.edges) << h;
  }
}

TEST(Oracle, MatchesBruteForceOnSmallGraphs) {
  std::vector<PlaneGraph> graphs;
  for (int k = 3; k <= 12; ++k) graphs.push_back(testing::cycle(k));
  for (int k = 3; k <= 6; ++k) graphs.push_back(testing::wheel(k));
  for (int n = 3; n <= 7; ++n) graphs.push_back(fan_outerplanar(n));
  for (int k = 1; k <= 4; ++k) graphs.push_back(disjoint_triangles(k));
  graphs.push_back(testing::k4());
  graphs.push_back(testing::c4_with_diagonal());
  graphs.push_back(testing::prism());
  graphs.push_back(testing::two_quads_apart());
  graphs.push_back(testing::quad_beside_pentagon());
  graphs.push_back(platonic("cube"));
  graphs.push_back(platonic("octahedron"));
  graphs.push_back(testing::path(5));
  graphs.push_back(testing::star(4));
  for (unsigned seed = 0; seed < 120; ++seed) {
    graphs.push_back(random_plane(4 + seed % 3, seed, 0.3, false));
    graphs.push_back(random_triangulation(4 + seed % 3, seed));
  }
  int checked = 0;
  for (const PlaneGraph& g : graphs) {
    if (g.edge_count() > 12) continue;
    ++checked;
    const GuardSet gs = minimum_guard_set(g);
    EXPECT_EQ(gs.edges, brute_force(g));
    EXPECT_TRUE(is_guardable_with(g, gs.size()));
    EXPECT_FALSE(is_guardable_with(g, gs.size() - 1));
  }
  EXPECT_GT(checked, 100);
}

TEST(Oracle, NeverAboveTheAlgorithms) {
  for (unsigned seed = 0; seed < 30; ++seed) {
    const PlaneGraph g = random_plane(12 + seed % 6, seed, 0.4, true);
    if (g.edge_count() > 40) continue;
    const GuardSet best = minimum_guard_set(g);
    EXPECT_TRUE(verify_guard_set(g, best).guarded);
    EXPECT_LE(best.size(), guard_two_fifths(g).size());
    EXPECT_LE(best.size(), guard_three_eighths(g).size());
  }
}

}  // namespace
}  // namespace edgeguard
