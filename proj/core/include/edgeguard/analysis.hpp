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

#include <limits>
#include <string>
#include <vector>

#include "edgeguard/plane_graph.hpp"

namespace edgeguard {

struct GraphStats {
  int n = 0;
  int m = 0;
  int f = 0;
  int c = 0;
  int alpha = 0;
  int min_degree = 0;
  int max_degree = 0;
};

GraphStats stats(const PlaneGraph& g);

inline constexpr int kUnreachable = std::numeric_limits<int>::max();

// Fewest edges on a path between the boundaries of f1 and f2; 0 when they
// share a vertex, kUnreachable when no path exists.
int face_hop_distance(const PlaneGraph& g, FaceId f1, FaceId f2);

// Ids of all 4-faces.
std::vector<FaceId> quad_faces(const PlaneGraph& g);

// Smallest pairwise hop distance between 4-faces (kUnreachable if fewer than
// two).
int min_quad_hop_distance(const PlaneGraph& g);

// Label-independent description of the face structure: every face becomes a
// sorted list of its walks (outer flag plus the vertex cycle rotated to its
// least form) and its isolated vertices; faces are then sorted. Rotations
// are included in least cyclic form. `relabel`, when non-empty, maps vertex
// ids before the description is formed. Without outer flags the description
// no longer records which face is unbounded.
std::string canonical_registry(const PlaneGraph& g,
                               const std::vector<VertexId>& relabel = {},
                               bool outer_flags = true);

bool is_forest(const PlaneGraph& g);

}  // namespace edgeguard
