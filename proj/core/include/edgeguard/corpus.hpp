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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edgeguard/plane_graph.hpp"

namespace edgeguard {

enum class Family {
  kDisjointTriangles,
  kFanOuterplanar,
  kRandomTriangulation,
  kRandomPlane,
  kPlatonic,
  kFarQuads,
  kFigureNgc,
};

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

struct GeneratorSpec {
  Family family = Family::kRandomTriangulation;
  // Vertex count, or the number of triangles for disjoint_triangles.
  int size = 10;
  std::uint64_t seed = 0;
  // random_plane: chance that each edge is offered for deletion.
  double deletion_probability = 0.3;
  // random_plane: refuse deletions that drop a degree below three.
  bool keep_min_degree3 = true;
  // far_quads: pairwise hop separation demanded between 4-faces.
  int quad_separation = 3;
  // far_quads: chance of widening the triangles around a quad into 5-faces.
  double grow_probability = 0.5;
  // far_quads: seeds tried before giving up.
  int attempts = 200;
  // platonic: tetrahedron, cube, octahedron, dodecahedron or icosahedron.
  std::string solid = "icosahedron";
};

PlaneGraph generate(const GeneratorSpec& spec);

// Embedding whose faces are the given vertex cycles; each directed edge must
// occur in exactly one cycle.
PlaneGraph from_face_cycles(int n, const std::vector<std::vector<VertexId>>& faces,
                            std::optional<std::vector<Point>> coords = {});

// Embedding of a crossing-free straight-line drawing. Components are placed
// side by side in the unbounded face.
PlaneGraph from_straight_line(
    const std::vector<Point>& pts,
    const std::vector<std::pair<VertexId, VertexId>>& edges);

PlaneGraph disjoint_triangles(int k);
PlaneGraph fan_outerplanar(int n);
PlaneGraph random_triangulation(int n, std::uint64_t seed);
PlaneGraph random_plane(int n, std::uint64_t seed, double deletion_probability,
                        bool keep_min_degree3);
PlaneGraph platonic(std::string_view solid);
PlaneGraph far_quads(int n, std::uint64_t seed, int separation = 3,
                     double grow_probability = 0.5, int attempts = 200);
PlaneGraph figure_no_guard_coloring();

// Vertex names of figure_no_guard_coloring, indexed by id.
const std::vector<std::string>& figure_vertex_names();

}  // namespace edgeguard
