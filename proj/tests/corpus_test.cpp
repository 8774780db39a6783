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

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "edgeguard/analysis.hpp"
#include "edgeguard/corpus.hpp"
#include "edgeguard/errors.hpp"
#include "edgeguard/io.hpp"

namespace edgeguard {
namespace {

bool all_triangles(const PlaneGraph& g) {
  const auto fs = g.faces();
  return std::all_of(fs.begin(), fs.end(), [&](FaceId f) { return g.is_triangle(f); });
}

TEST(Corpus, DisjointTrianglesCounts) {
  const GraphStats s = stats(disjoint_triangles(5));
  EXPECT_EQ(s.n, 15);
  EXPECT_EQ(s.f, 6);
  EXPECT_EQ(s.c, 5);
}

TEST(Corpus, PlatonicSolids) {
  struct Want {
    const char* name;
    int n, m, f, deg;
  };
  for (const Want& w : {Want{"tetrahedron", 4, 6, 4, 3}, Want{"cube", 8, 12, 6, 3},
                        Want{"octahedron", 6, 12, 8, 4},
                        Want{"dodecahedron", 20, 30, 12, 3},
                        Want{"icosahedron", 12, 30, 20, 5}}) {
    const PlaneGraph g = platonic(w.name);
    const GraphStats s = stats(g);
    EXPECT_EQ(s.n, w.n) << w.name;
    EXPECT_EQ(s.m, w.m) << w.name;
    EXPECT_EQ(s.f, w.f) << w.name;
    EXPECT_EQ(s.min_degree, w.deg) << w.name;
    EXPECT_EQ(s.max_degree, w.deg) << w.name;
    for (FaceId f : g.faces()) {
      EXPECT_EQ(g.side_count(f), 2 * w.m / w.f) << w.name;
      EXPECT_TRUE(g.is_simple_face(f, 2 * w.m / w.f)) << w.name;
    }
  }
  EXPECT_THROW(platonic("torus"), Error);
}

TEST(Corpus, RandomTriangulationIsMaximal) {
  for (int seed = 1; seed <= 5; ++seed) {
    const PlaneGraph g = random_triangulation(20, seed);
    EXPECT_TRUE(all_triangles(g));
    const GraphStats s = stats(g);
    EXPECT_GE(s.min_degree, 3);
    EXPECT_EQ(s.m, 3 * s.n - 6);
    EXPECT_NO_THROW(g.check_invariants());
  }
}

TEST(Corpus, RandomPlaneKeepsMinimumDegree) {
  for (int seed = 0; seed < 10; ++seed) {
    const PlaneGraph g = random_plane(40, seed, 0.5, true);
    EXPECT_GE(stats(g).min_degree, 3);
    EXPECT_EQ(g.component_count(), 1);
    EXPECT_NO_THROW(g.check_invariants());
  }
}

TEST(Corpus, SeededDeterminism) {
  for (Family fam : {Family::kRandomTriangulation, Family::kRandomPlane,
                     Family::kFarQuads}) {
    GeneratorSpec spec;
    spec.family = fam;
    spec.size = 30;
    spec.seed = 99;
    const auto a = write_graph_document(generate(spec).serialize());
    const auto b = write_graph_document(generate(spec).serialize());
    EXPECT_EQ(a, b) << family_name(fam);
    spec.seed = 100;
    EXPECT_NE(a, write_graph_document(generate(spec).serialize()));
  }
}

TEST(Corpus, FarQuadsAreSeparated) {
  int merged_case = 0;
  for (int seed = 0; seed < 10; ++seed) {
    const PlaneGraph g = far_quads(40, seed);
    const auto quads = quad_faces(g);
    EXPECT_FALSE(quads.empty());
    EXPECT_GE(min_quad_hop_distance(g), 3);
    for (FaceId q : quads) {
      bool touches_triangle = false;
      for (const auto& w : g.face_walks(q)) {
        for (Dart d : w) touches_triangle |= g.is_triangle(g.face_of(d ^ 1));
      }
      merged_case += !touches_triangle;
    }
  }
  EXPECT_GT(merged_case, 0);
}

TEST(Corpus, FamilyNamesRoundTrip) {
  for (Family f : {Family::kDisjointTriangles, Family::kFanOuterplanar,
                   Family::kRandomTriangulation, Family::kRandomPlane,
                   Family::kPlatonic, Family::kFarQuads, Family::kFigureNgc}) {
    EXPECT_EQ(parse_family(family_name(f)), f);
  }
  EXPECT_FALSE(parse_family("klein_bottle").has_value());
}

// Face list of the counterexample drawing, by vertex name.
TEST(Corpus, FigureTranscription) {
  const PlaneGraph g = figure_no_guard_coloring();
  EXPECT_EQ(g.vertex_count(), 10);
  EXPECT_EQ(g.edge_count(), 21);
  EXPECT_EQ(g.face_count(), 13);
  const auto& names = figure_vertex_names();
  std::set<std::set<std::string>> faces;
  for (FaceId f : g.faces()) {
    std::set<std::string> vs;
    for (VertexId v : g.face_vertices(f)) vs.insert(names[v]);
    faces.insert(vs);
  }
  const std::set<std::set<std::string>> want{
      {"a", "b", "c"},          {"a", "c", "v1", "v2"}, {"c", "v6", "v5", "b"},
      {"v1", "v6", "v4", "v3"}, {"c", "v1", "v6"},      {"a", "v2", "s"},
      {"b", "v5", "s"},         {"v2", "v1", "v3"},     {"v5", "v6", "v4"},
      {"v2", "v3", "s"},        {"v5", "v4", "s"},      {"s", "v3", "v4"},
      {"a", "s", "b"}};
  EXPECT_EQ(faces, want);
}

TEST(Corpus, FanIsOuterplanar) {
  const PlaneGraph g = fan_outerplanar(6);
  const GraphStats s = stats(g);
  EXPECT_EQ(s.n, 6);
  EXPECT_EQ(s.m, 9);
  EXPECT_EQ(s.f, 5);
}

}  // namespace
}  // namespace edgeguard
