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

#include <string>
#include <vector>

#include "edgeguard/plane_graph.hpp"
#include "edgeguard/rational.hpp"

namespace edgeguard {

// A set of edges claimed to guard every face, with the algorithm that produced
// it and the bound it promises.
struct GuardSet {
  std::vector<EdgeId> edges;  // sorted, distinct
  std::string algorithm;
  Rational bound;

  int size() const { return static_cast<int>(edges.size()); }
  void normalize();
};

struct GuardReport {
  bool guarded = false;
  std::vector<FaceId> unguarded;
};

// Checks that every face has a boundary vertex covered by an endpoint of a
// guard edge. Throws UnknownEdge for ids not in g.
GuardReport verify_guard_set(const PlaneGraph& g,
                             const std::vector<EdgeId>& edges);

inline GuardReport verify_guard_set(const PlaneGraph& g, const GuardSet& gs) {
  return verify_guard_set(g, gs.edges);
}

// True when the edges cover a vertex of face f.
bool guards_face(const PlaneGraph& g, const std::vector<EdgeId>& edges,
                 FaceId f);

}  // namespace edgeguard
