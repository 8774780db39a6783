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

#include "edgeguard/reductions.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <map>

#include "edgeguard/analysis.hpp"
#include "edgeguard/corpus.hpp"
#include "edgeguard/errors.hpp"
#include "test_graphs.hpp"

namespace edgeguard {
namespace {

using testing::EdgeList;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvariantViolated;
}

void expect_guards(const PlaneGraph& g, const GuardSet& gs, Rational c) {
  EXPECT_TRUE(verify_guard_set(g, gs).guarded) << gs.algorithm;
  EXPECT_LE(gs.size(),
            std::max<std::int64_t>(1, (c * Rational(g.vertex_count())).floor()))
      << gs.algorithm;
}

EdgeId edge(const PlaneGraph& g, VertexId u, VertexId v) {
  return *g.find_edge(u, v);
}

TEST(ClassifyEdge, K4EdgesAreWeak) {
  const PlaneGraph g = testing::k4();
  for (EdgeId e : g.edges()) EXPECT_EQ(classify_edge(g, e), EdgeStrength::kWeak);
}

TEST(ClassifyEdge, PrismTriangleAndSpoke) {
  const PlaneGraph g = testing::prism();
  EXPECT_EQ(classify_edge(g, edge(g, 0, 1)), EdgeStrength::kSemiweak);
  EXPECT_EQ(classify_edge(g, edge(g, 3, 4)), EdgeStrength::kSemiweak);
  EXPECT_EQ(classify_edge(g, edge(g, 0, 3)), EdgeStrength::kStrong);
}

TEST(ClassifyEdge, CubeEdgesAreStrong) {
  const PlaneGraph g = platonic("cube");
  for (EdgeId e : g.edges()) {
    EXPECT_EQ(classify_edge(g, e), EdgeStrength::kStrong);
  }
  EXPECT_EQ(code_of([&] { classify_edge(g, 99); }), ErrorCode::kUnknownEdge);
}

TEST(LowDegreeStep, TriangleRemovesAllThree) {
  const auto s = find_low_degree_step(testing::triangle(), false);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->rule, Rule::kDegree2);
  EXPECT_EQ(s->guard_edges.size(), 1u);
  EXPECT_EQ(s->removed_vertices.size(), 3u);
}

TEST(LowDegreeStep, StarLeaf) {
  const auto s = find_low_degree_step(testing::star(3), false);
  ASSERT_TRUE(s);
  EXPECT_EQ(s->rule, Rule::kDegree0or1);
  EXPECT_TRUE(s->guard_edges.empty());
  EXPECT_EQ(s->removed_vertices, std::vector<VertexId>{1});
}

TEST(LowDegreeStep, OctahedronHasNone) {
  EXPECT_FALSE(find_low_degree_step(platonic("octahedron"), false));
}

// A pendant vertex inside a 4-cycle: dropping it would open a new 4-face.
TEST(LowDegreeStep, ProtectQuadsGuardsThePendant) {
  const std::vector<Point> pts{{0, 0}, {4, 0}, {4, 4}, {0, 4}, {1, 1}};
  EdgeList e = testing::cycle_edges(4);
  e.emplace_back(4, 0);
  const PlaneGraph g = from_straight_line(pts, e);
  const auto plain = find_low_degree_step(g, false);
  ASSERT_TRUE(plain);
  EXPECT_TRUE(plain->guard_edges.empty());
  const auto guarded = find_low_degree_step(g, true);
  ASSERT_TRUE(guarded);
  EXPECT_EQ(guarded->guard_edges, std::vector<EdgeId>{edge(g, 0, 1)});
  EXPECT_EQ(guarded->removed_vertices, (std::vector<VertexId>{0, 1, 4}));
  EXPECT_TRUE(step_is_valid(g, *guarded, Rational(1, 3)));
}

TEST(LowDegreeStep, ProtectQuadsLeavesHarmlessLeaves) {
  const auto s = find_low_degree_step(testing::star(3), true);
  ASSERT_TRUE(s);
  EXPECT_TRUE(s->guard_edges.empty());
}

TEST(RunIterative, TriangleNeedsOneEdge) {
  const PlaneGraph g = testing::triangle();
  const GuardSet gs = guard_two_degenerate(g);
  EXPECT_EQ(gs.size(), 1);
  EXPECT_EQ(gs.bound, Rational(1));
}

TEST(RunIterative, SingleFaceShortcut) {
  const PlaneGraph g = testing::path(3);
  std::vector<ReductionStep> trace;
  const GuardSet gs = run_iterative(
      g, [](const PlaneGraph&) { return std::optional<ReductionStep>{}; },
      Rational(1, 3), "n3-degenerate", &trace);
  EXPECT_EQ(gs.size(), 1);
  EXPECT_TRUE(trace.empty());
}

TEST(RunIterative, DisjointTrianglesNeedOneEach) {
  const PlaneGraph g = disjoint_triangles(4);
  const GuardSet gs = guard_two_degenerate(g);
  EXPECT_EQ(gs.size(), 4);
  EXPECT_TRUE(verify_guard_set(g, gs).guarded);
}

TEST(RunIterative, ExhaustedProvider) {
  EXPECT_EQ(code_of([] {
              run_iterative(
                  testing::k4(),
                  [](const PlaneGraph&) { return std::optional<ReductionStep>{}; },
                  Rational(1, 3), "none");
            }),
            ErrorCode::kStepNotFound);
}

TEST(RunIterative, RejectsOverspendingStep) {
  const auto greedy = [](const PlaneGraph& h) {
    const auto es = h.edges();
    return std::optional<ReductionStep>(
        ReductionStep{{es.begin(), es.end()}, {h.vertices().front()}, Rule::kDegree2});
  };
  EXPECT_EQ(code_of([&] {
              run_iterative(testing::k4(), greedy, Rational(1, 3), "bad");
            }),
            ErrorCode::kInvariantViolated);
}

TEST(RunIterative, TinyInputsRejected) {
  EXPECT_EQ(code_of([] { guard_two_degenerate(testing::path(2)); }),
            ErrorCode::kPreconditionFailed);
}

TEST(TwoDegenerate, FanOuterplanar) {
  const PlaneGraph g = fan_outerplanar(6);
  const GuardSet gs = guard_two_degenerate(g);
  EXPECT_LE(gs.size(), 2);
  EXPECT_TRUE(verify_guard_set(g, gs).guarded);
}

TEST(TwoDegenerate, DisjointTriangles) {
  for (int k = 1; k <= 8; ++k) {
    EXPECT_EQ(guard_two_degenerate(disjoint_triangles(k)).size(), k);
  }
}

TEST(TwoDegenerate, PathOfThree) {
  EXPECT_EQ(guard_two_degenerate(testing::path(3)).size(), 1);
}

TEST(TwoDegenerate, RejectsK4) {
  EXPECT_FALSE(is_two_degenerate(testing::k4()));
  EXPECT_FALSE(is_two_degenerate(testing::wheel(5)));
  EXPECT_TRUE(is_two_degenerate(testing::cycle(7)));
  EXPECT_EQ(code_of([] { guard_two_degenerate(testing::k4()); }),
            ErrorCode::kNotTwoDegenerate);
}

TEST(Lebesgue, PlatonicCases) {
  const PlaneGraph k4 = testing::k4();
  Configuration c = find_lebesgue_configuration(k4);
  EXPECT_EQ(k4.degree(c.u), 3);
  EXPECT_TRUE(k4.is_triangle(c.face));

  const PlaneGraph oct = platonic("octahedron");
  c = find_lebesgue_configuration(oct);
  EXPECT_EQ(oct.degree(c.u), 4);
  EXPECT_TRUE(oct.is_triangle(c.face));

  const PlaneGraph ico = platonic("icosahedron");
  c = find_lebesgue_configuration(ico);
  EXPECT_EQ(ico.degree(c.u), 5);
  EXPECT_TRUE(ico.is_triangle(c.face));

  const PlaneGraph cube = platonic("cube");
  c = find_lebesgue_configuration(cube);
  EXPECT_EQ(cube.degree(c.u), 3);
  EXPECT_EQ(cube.side_count(c.face), 4);
}

TEST(Lebesgue, NeedsMinimumDegreeThree) {
  EXPECT_EQ(code_of([] { find_lebesgue_configuration(testing::cycle(5)); }),
            ErrorCode::kPreconditionFailed);
}

TEST(TwoFifths, Examples) {
  const PlaneGraph ico = platonic("icosahedron");
  const GuardSet a = guard_two_fifths(ico);
  EXPECT_LE(a.size(), 4);
  expect_guards(ico, a, Rational(2, 5));

  EXPECT_EQ(guard_two_fifths(testing::k4()).size(), 1);
  EXPECT_EQ(guard_two_fifths(testing::triangle()).size(), 1);
}

TEST(Borodin, PlatonicConfigurations) {
  EXPECT_EQ(find_borodin_configuration(testing::k4()).tag, Rule::kL1);
  EXPECT_EQ(find_borodin_configuration(platonic("cube")).tag, Rule::kL6);
  EXPECT_EQ(find_borodin_configuration(platonic("dodecahedron")).tag, Rule::kL7);
  EXPECT_EQ(find_borodin_configuration(platonic("octahedron")).tag, Rule::kL2a);
  EXPECT_EQ(find_borodin_configuration(platonic("icosahedron")).tag, Rule::kL3);
}

TEST(Borodin, K4StepUsesOppositeEdge) {
  const PlaneGraph g = testing::k4();
  const Configuration c = find_borodin_configuration(g);
  const ReductionStep s = step_for_configuration(g, c);
  ASSERT_EQ(s.guard_edges.size(), 1u);
  EXPECT_EQ(s.removed_vertices.size(), 3u);
  const auto [a, b] = g.endpoints(s.guard_edges[0]);
  EXPECT_NE(a, c.u);
  EXPECT_NE(b, c.u);
}

// Both triangle apexes of an octahedron edge are antipodal, so p and q are
// never adjacent and the two-edge branch runs.
TEST(Borodin, OctahedronL2a) {
  const PlaneGraph g = platonic("octahedron");
  const Configuration c = find_borodin_configuration(g);
  const ReductionStep s = step_for_configuration(g, c);
  EXPECT_EQ(s.rule, Rule::kL2a);
  EXPECT_EQ(s.guard_edges.size(), 2u);
  EXPECT_EQ(s.removed_vertices.size(), 6u);
  EXPECT_TRUE(step_is_valid(g, s, Rational(3, 8)));
}

TEST(Borodin, DodecahedronL7) {
  const PlaneGraph g = platonic("dodecahedron");
  const ReductionStep s = step_for_configuration(g, find_borodin_configuration(g));
  EXPECT_EQ(s.guard_edges.size(), 2u);
  EXPECT_EQ(s.removed_vertices.size(), 6u);
  EXPECT_TRUE(step_is_valid(g, s, Rational(3, 8)));
}

TEST(Borodin, CubeL6) {
  const PlaneGraph g = platonic("cube");
  const ReductionStep s = step_for_configuration(g, find_borodin_configuration(g));
  EXPECT_TRUE(step_is_valid(g, s, Rational(3, 8)));
}

TEST(Borodin, InvalidWitness) {
  const PlaneGraph g = platonic("cube");
  Configuration c = find_borodin_configuration(g);
  c.tag = Rule::kL1;
  EXPECT_EQ(code_of([&] { step_for_configuration(g, c); }),
            ErrorCode::kInvalidWitness);
  c.tag = Rule::kL7;
  c.face = 0;
  EXPECT_EQ(code_of([&] { step_for_configuration(g, c); }),
            ErrorCode::kInvalidWitness);
}

// Every construction relies on the absence of L1 and L4. On such graphs each
// configuration present must yield a valid step.
TEST(Borodin, EveryConfigurationBuildsWithoutL1L4) {
  std::map<Rule, int> built;
  for (unsigned seed = 0; seed < 400; ++seed) {
    const PlaneGraph t = random_triangulation(10 + seed % 40, seed);
    PlaneGraph g;
    try {
      switch (seed % 4) {
        case 0:
          g = testing::prune(testing::raise_degrees(t, 5, seed), 4,
                             0.1 * (1 + seed % 6), seed);
          break;
        case 1: g = testing::raise_degrees(t, 4, seed); break;
        case 2: g = testing::dual(testing::prune(t, 3, 0.1 * (seed % 5), seed)); break;
        default: g = testing::dual(testing::raise_degrees(t, 4 + seed % 2, seed));
      }
    } catch (const Error&) {
      continue;
    }
    if (stats(g).min_degree < 3) continue;
    bool low = false;
    for_each_borodin_configuration(g, [&](const Configuration& c) {
      low = c.tag == Rule::kL1 || c.tag == Rule::kL4;
      return low;
    });
    if (low) continue;
    for_each_borodin_configuration(g, [&](const Configuration& c) {
      const ReductionStep s = step_for_configuration(g, c);
      EXPECT_TRUE(step_is_valid(g, s, Rational(3, 8))) << seed;
      ++built[c.tag];
      return false;
    });
  }
  for (Rule r : {Rule::kL2a, Rule::kL2b, Rule::kL3, Rule::kL5, Rule::kL6, Rule::kL7}) {
    EXPECT_GT(built[r], 0) << rule_name(r);
  }
}

TEST(ThreeEighths, Examples) {
  const PlaneGraph ico = platonic("icosahedron");
  const GuardSet gs = guard_three_eighths(ico);
  EXPECT_LE(gs.size(), 4);
  expect_guards(ico, gs, Rational(3, 8));
  EXPECT_EQ(guard_three_eighths(testing::triangle()).size(), 1);
}

TEST(ThreeEighths, SixtyVertexTriangulations) {
  for (int seed = 0; seed < 20; ++seed) {
    const PlaneGraph g = random_triangulation(60, seed);
    const GuardSet gs = guard_three_eighths(g);
    EXPECT_LE(gs.size(), 22) << seed;
    EXPECT_TRUE(verify_guard_set(g, gs).guarded) << seed;
  }
}

TEST(Reductions, SweepAllAlgorithmsWithTrace) {
  const auto check = [](const PlaneGraph& g, const std::string& what) {
    SCOPED_TRACE(what);
    expect_guards(g, guard_two_fifths(g), Rational(2, 5));
    expect_guards(g, guard_three_eighths(g), Rational(3, 8));
    if (is_two_degenerate(g)) {
      expect_guards(g, guard_two_degenerate(g), Rational(1, 3));
    }
  };
  for (int seed = 0; seed < 40; ++seed) {
    for (double p : {0.2, 0.5, 0.8}) {
      check(random_plane(10 + seed, seed, p, seed % 2 == 0), "plane");
    }
    check(random_triangulation(8 + seed, seed), "tri");
    check(far_quads(20 + seed % 10, seed), "quads");
  }
  for (int n = 3; n <= 12; ++n) check(fan_outerplanar(n), "fan");
  for (const char* s : {"tetrahedron", "cube", "octahedron", "dodecahedron",
                        "icosahedron"}) {
    check(platonic(s), s);
  }
  check(figure_no_guard_coloring(), "figure");
}

TEST(Reductions, TraceStepsRespectRatio) {
  const PlaneGraph g = random_plane(50, 7, 0.4, true);
  std::vector<ReductionStep> trace;
  PlaneGraph h = g;
  const auto provider = [](const PlaneGraph& x) -> std::optional<ReductionStep> {
    if (auto s = find_low_degree_step(x, false)) return s;
    return step_for_configuration(x, find_borodin_configuration(x));
  };
  const GuardSet gs = run_iterative(g, provider, Rational(3, 8), "probe", &trace);
  EXPECT_FALSE(trace.empty());
  for (const ReductionStep& s : trace) {
    EXPECT_TRUE(step_is_valid(h, s, Rational(3, 8))) << rule_name(s.rule);
    h.delete_vertices(s.removed_vertices);
  }
  EXPECT_TRUE(verify_guard_set(g, gs).guarded);
}

TEST(Reductions, ConfigurationsExistOnMinDegreeThree) {
  int tried = 0;
  for (int seed = 0; seed < 100; ++seed) {
    const PlaneGraph g = random_plane(15 + seed % 60, seed, 0.6, true);
    if (stats(g).min_degree < 3) continue;
    ++tried;
    EXPECT_NO_THROW(find_lebesgue_configuration(g)) << seed;
    EXPECT_NO_THROW(find_borodin_configuration(g)) << seed;
  }
  EXPECT_GT(tried, 50);
}

}  // namespace
}  // namespace edgeguard
