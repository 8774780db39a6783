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

#include <algorithm>
#include <initializer_list>
#include <optional>
#include <vector>

#include "edgeguard/plane_graph.hpp"
#include "edgeguard/reductions.hpp"

namespace edgeguard::detail {

// Accumulates E' and V' for one reduction step.
class StepBuilder {
 public:
  StepBuilder(const PlaneGraph& g, Rule rule)
      : g_(g), rule_(rule), covered_(g.vertex_slots(), 0) {}

  // Adds edge (a, b) and both endpoints; false if the edge is absent.
  bool add_edge(VertexId a, VertexId b) {
    const auto e = g_.find_edge(a, b);
    if (!e) return false;
    edges_.push_back(*e);
    covered_[a] = covered_[b] = 1;
    add_vertex(a);
    add_vertex(b);
    return true;
  }

  void add_vertex(VertexId v) {
    if (!has_vertex(v)) vertices_.push_back(v);
  }

  template <typename... Vs>
  void add_vertices(Vs... vs) {
    (add_vertex(vs), ...);
  }

  bool has_vertex(VertexId v) const {
    return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
  }

  bool face_guarded(FaceId f) const {
    for (VertexId x : g_.face_vertices(f)) {
      if (covered_[x]) return true;
    }
    return false;
  }

  std::vector<FaceId> unguarded_at(VertexId v) const {
    std::vector<FaceId> out;
    for (FaceId f : g_.faces_at(v)) {
      if (!face_guarded(f)) out.push_back(f);
    }
    return out;
  }

  // Adds v to V' and, if some faces around v are still unguarded, an edge
  // (v', v'') where v' is a neighbor of v on all of them. False if no such
  // neighbor exists.
  bool cover_around(VertexId v) {
    add_vertex(v);
    const auto open = unguarded_at(v);
    if (open.empty()) return true;
    for (Dart d : g_.rotation(v)) {
      const VertexId x = g_.head(d);
      const bool on_all = std::all_of(open.begin(), open.end(), [&](FaceId f) {
        return g_.on_face(x, f);
      });
      if (!on_all) continue;
      const auto y = partner(v, x, open.front());
      if (y && add_edge(x, *y)) return true;
    }
    return false;
  }

  ReductionStep take() {
    ReductionStep s;
    s.guard_edges = edges_;
    std::sort(s.guard_edges.begin(), s.guard_edges.end());
    s.guard_edges.erase(std::unique(s.guard_edges.begin(), s.guard_edges.end()),
                        s.guard_edges.end());
    s.removed_vertices = vertices_;
    std::sort(s.removed_vertices.begin(), s.removed_vertices.end());
    s.rule = rule_;
    return s;
  }

 private:
  // Second endpoint for the cover edge at x. Prefers the walk neighbor of x
  // on face f, then any fresh neighbor.
  std::optional<VertexId> partner(VertexId v, VertexId x, FaceId f) const {
    std::vector<VertexId> cands;
    const Dart vx = g_.dart(v, x);
    if (g_.face_of(vx) == f) cands.push_back(g_.head(g_.next(vx)));
    if (g_.face_of(vx ^ 1) == f) cands.push_back(g_.tail(g_.prev(vx ^ 1)));
    for (const Corner& c : g_.corners_on(x, f)) {
      if (c.out != kNone) cands.push_back(g_.head(c.out));
    }
    for (VertexId y : g_.neighbors(x)) cands.push_back(y);
    for (VertexId y : cands) {
      if (y != v && !has_vertex(y)) return y;
    }
    for (VertexId y : cands) {
      if (y != v) return y;
    }
    return std::nullopt;
  }

  const PlaneGraph& g_;
  Rule rule_;
  std::vector<char> covered_;
  std::vector<EdgeId> edges_;
  std::vector<VertexId> vertices_;
};

// Smallest neighbor of v outside `avoid`.
inline std::optional<VertexId> lowest_neighbor_except(
    const PlaneGraph& g, VertexId v, std::initializer_list<VertexId> avoid) {
  std::optional<VertexId> best;
  for (Dart d : g.rotation(v)) {
    const VertexId x = g.head(d);
    if (std::find(avoid.begin(), avoid.end(), x) != avoid.end()) continue;
    if (!best || x < *best) best = x;
  }
  return best;
}

// Third vertex of the triangle on the left of dart d, if that face is one.
inline std::optional<VertexId> apex(const PlaneGraph& g, Dart d) {
  if (!g.is_triangle(g.face_of(d))) return std::nullopt;
  return g.head(g.next(d));
}

inline int triangle_corners(const PlaneGraph& g, VertexId v) {
  int k = 0;
  for (Dart d : g.rotation(v)) k += g.is_triangle(g.face_of(d));
  return k;
}

int min_degree(const PlaneGraph& g);

}  // namespace edgeguard::detail
