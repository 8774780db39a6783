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

#include "edgeguard/guard_set.hpp"

#include <algorithm>

#include "edgeguard/errors.hpp"

namespace edgeguard {

void GuardSet::normalize() {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

namespace {

std::vector<char> covered_vertices(const PlaneGraph& g,
                                   const std::vector<EdgeId>& edges) {
  std::vector<char> cov(g.vertex_slots(), 0);
  for (EdgeId e : edges) {
    if (!g.has_edge(e)) {
      throw Error(ErrorCode::kUnknownEdge, "guard edge " + std::to_string(e));
    }
    const auto [u, v] = g.endpoints(e);
    cov[u] = 1;
    cov[v] = 1;
  }
  return cov;
}

bool face_covered(const PlaneGraph& g, const std::vector<char>& cov,
                  FaceId f) {
  for (VertexId v : g.face_vertices(f)) {
    if (cov[v]) return true;
  }
  return false;
}

}  // namespace

GuardReport verify_guard_set(const PlaneGraph& g,
                             const std::vector<EdgeId>& edges) {
  const auto cov = covered_vertices(g, edges);
  GuardReport report;
  for (FaceId f : g.faces()) {
    if (!face_covered(g, cov, f)) report.unguarded.push_back(f);
  }
  report.guarded = report.unguarded.empty();
  return report;
}

bool guards_face(const PlaneGraph& g, const std::vector<EdgeId>& edges,
                 FaceId f) {
  return face_covered(g, covered_vertices(g, edges), f);
}

}  // namespace edgeguard
