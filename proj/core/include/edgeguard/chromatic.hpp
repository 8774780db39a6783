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

// Coloring-based guard sets: four-color a triangulated supergraph and read
// guard sets off pairs of color classes; two-color guard colorings; and the
// variant for graphs whose 4-faces lie far apart.

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "edgeguard/guard_set.hpp"
#include "edgeguard/plane_graph.hpp"

namespace edgeguard {

enum class TriangulationMode { kStandard, kThreeHop };

struct AddedEdge {
  EdgeId edge = kNone;
  // Face of the input graph whose interior the edge runs through.
  FaceId face = kNone;
};

struct QuadDiagonal {
  FaceId face = kNone;
  EdgeId edge = kNone;
};

struct FaceTriple {
  FaceId face = kNone;
  std::array<EdgeId, 3> edges{};
};

// A 4-face opened into its neighbor by deleting (u, v). w_q and w_f are the
// other boundary neighbors of u on the quad and on the neighbor face.
struct QuadMerge {
  FaceId quad = kNone;
  FaceId neighbor = kNone;
  EdgeId removed = kNone;
  VertexId u = kNone;
  VertexId v = kNone;
  VertexId w_q = kNone;
  VertexId w_f = kNone;
  std::array<EdgeId, 3> inserted{};
};

struct TriangulationResult {
  PlaneGraph supergraph;
  std::vector<AddedEdge> added;
  std::vector<QuadDiagonal> quad_diagonals;
  std::vector<FaceTriple> triples;
  // Faces with six or more sides whose triple could not be anchored at the
  // lowest boundary vertex.
  std::vector<FaceId> triple_fallbacks;
  std::vector<QuadMerge> merges;
};

// Every face of the result is a triangle and no added edge repeats one of g.
// In kThreeHop mode `marked` lists the protected 4-faces (all 4-faces when
// absent); those without a triangle neighbor are merged before triangulating.
// Throws PreconditionFailed, QuadsTooClose or UntriangulatableFace.
TriangulationResult triangulate(
    const PlaneGraph& g, TriangulationMode mode = TriangulationMode::kStandard,
    const std::optional<std::vector<FaceId>>& marked = std::nullopt);

// Per vertex slot: a color in 0..3, kNone for dead slots.
struct VertexColoring {
  std::vector<int> colors;
};

struct ColoringOptions {
  std::int64_t node_budget = 10'000'000;
};

// DSATUR with backtracking. Throws Timeout when the budget runs out.
VertexColoring four_color(const PlaneGraph& gp, const ColoringOptions& opts = {});

// Names of the nine sets below, in order.
inline constexpr std::array<std::string_view, 9> kColorSetNames = {
    "12", "13", "14", "23", "24", "34", "1234", "1324", "1423"};

struct ColorGuardSets {
  std::array<GuardSet, 9> sets;
  // |V(G_ij)| and |M_ij| for the six pairs.
  std::array<int, 6> class_sizes{};
  std::array<int, 6> matching_sizes{};
  // Edges added to the three paired sets for faces the matchings miss.
  int augmentations = 0;
};

// Throws ColoringMismatch unless col is proper on g and gives every face at
// least three colors.
ColorGuardSets guard_sets_from_coloring(const PlaneGraph& g,
                                        const VertexColoring& col);

GuardSet chromatic_guard(const PlaneGraph& g,
                         const ColoringOptions& opts = {});

// Per vertex slot: side 0 or 1, kNone for dead slots.
struct TwoColoring {
  std::vector<int> sides;
};

// No face is monochromatic and every face has a monochromatic boundary edge.
// Isolated vertices take no part in either condition.
bool is_guard_coloring(const PlaneGraph& g, const TwoColoring& tc);

struct GuardColoringOptions {
  int vertex_budget = 24;
};

// Exhaustive search with the lowest vertex fixed to side 0. Throws
// BudgetExceeded when g has more non-isolated vertices than the budget.
std::optional<TwoColoring> find_guard_coloring(
    const PlaneGraph& g, const GuardColoringOptions& opts = {});

// M1 u M2, then M1 and M2 each completed over their own side. Throws
// NotAGuardColoring.
std::array<GuardSet, 3> guard_sets_from_guard_coloring(const PlaneGraph& g,
                                                       const TwoColoring& tc);

GuardSet guard_from_guard_coloring(const PlaneGraph& g, const TwoColoring& tc);

struct ThreeHopReport {
  std::vector<EdgeId> reduction_edges;
  int residual_vertices = 0;
  std::vector<EdgeId> seeds;
  // "12", "34" or "1234"; empty when the reduction finished the job.
  std::string_view chosen;
};

// Throws QuadsTooClose, SeedConflict and whatever the coloring raises.
GuardSet three_hop_guard(const PlaneGraph& g, ThreeHopReport* report = nullptr,
                         const ColoringOptions& opts = {});

}  // namespace edgeguard
