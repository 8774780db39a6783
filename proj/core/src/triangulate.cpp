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

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "edgeguard/analysis.hpp"
#include "edgeguard/chromatic.hpp"
#include "edgeguard/errors.hpp"

namespace edgeguard {
namespace {

bool has_triangle_neighbor(const PlaneGraph& g, FaceId q) {
  const auto walks = g.face_walks(q);
  for (Dart d : walks.front()) {
    if (g.is_triangle(g.face_of(PlaneGraph::twin(d)))) return true;
  }
  return false;
}

class Triangulator {
 public:
  explicit Triangulator(const PlaneGraph& g)
      : g_(g), skip_(g.face_slots(), 0), origin_(g.face_slots()) {
    r_.supergraph = g;
    for (FaceId f = 0; f < g.face_slots(); ++f) origin_[f] = f;
  }

  void merge_quads(const std::vector<FaceId>& marked) {
    // Triangle neighbors are judged on the input, before any face changes.
    std::vector<FaceId> lonely;
    for (FaceId q : marked) {
      if (!has_triangle_neighbor(g_, q)) lonely.push_back(q);
    }
    for (FaceId q : lonely) merge(q);
  }

  void special_rules() {
    for (FaceId f : g_.faces()) {
      if (skip_[f]) continue;
      const int k = h().side_count(f);
      if (k == 4 && h().is_quad(f)) {
        quad_rule(f);
      } else if (k >= 6 && h().is_simple_face(f, k)) {
        triple_rule(f);
      }
    }
  }

  void fill_all() {
    for (FaceId f : h().faces()) fill(f);
  }

  TriangulationResult take() { return std::move(r_); }

 private:
  PlaneGraph& h() { return r_.supergraph; }
  const PlaneGraph& h() const { return r_.supergraph; }

  bool legal(VertexId a, VertexId b) const {
    return a != b && !h().adjacent(a, b) && !g_.adjacent(a, b);
  }

  EdgeId join(Dart da, Dart db) {
    PlaneGraph& gp = h();
    const FaceId from = origin_[gp.face_of(da)];
    const EdgeId e = gp.insert_edge_at({gp.tail(da), da}, {gp.tail(db), db});
    origin_.resize(gp.face_slots(), from);
    r_.added.push_back({e, from});
    return e;
  }

  // Single boundary walk of f, rotated to start at its lowest vertex.
  std::vector<Dart> boundary(const std::vector<Dart>& walk) const {
    std::vector<Dart> w = walk;
    const auto it = std::min_element(w.begin(), w.end(), [&](Dart x, Dart y) {
      return h().tail(x) < h().tail(y);
    });
    std::rotate(w.begin(), it, w.end());
    return w;
  }
  std::vector<Dart> boundary(FaceId f) const {
    return boundary(h().face_walks(f).front());
  }

  void quad_rule(FaceId f) {
    const auto w = boundary(f);
    for (int i : {0, 1}) {
      if (legal(h().tail(w[i]), h().tail(w[i + 2]))) {
        r_.quad_diagonals.push_back({f, join(w[i], w[i + 2])});
        return;
      }
    }
  }

  void triple_rule(FaceId f) {
    const auto w = boundary(f);
    const int k = static_cast<int>(w.size());
    auto at = [&](int i) { return w[i % k]; };
    auto v = [&](int i) { return h().tail(at(i)); };
    for (int p = 0; p < k; ++p) {
      if (!legal(v(p), v(p + 2)) || !legal(v(p + 2), v(p + 4)) ||
          !legal(v(p + 4), v(p))) {
        continue;
      }
      if (p != 0) r_.triple_fallbacks.push_back(f);
      FaceTriple t{f, {}};
      t.edges[0] = join(at(p), at(p + 2));
      t.edges[1] = join(at(p + 2), at(p + 4));
      // at(p) now bounds the cut-off triangle; enter v_p through the new edge.
      t.edges[2] = join(at(p + 4), h().dart(v(p), v(p + 2)));
      r_.triples.push_back(t);
      return;
    }
    r_.triple_fallbacks.push_back(f);
  }

  // Deletes (u, v) from q and fans u's two other neighbors with v.
  void merge(FaceId q) {
    PlaneGraph& gp = h();
    for (Dart d : boundary(q)) {
      for (Dart d0 : {d, PlaneGraph::twin(d)}) {
        const VertexId u = gp.tail(d0);
        const VertexId v = gp.head(d0);
        const Dart into_u = gp.prev(d0);
        const Dart out_u = gp.next(PlaneGraph::twin(d0));
        const VertexId a = gp.tail(into_u);
        const VertexId b = gp.head(out_u);
        if (a == b || a == v || b == v) continue;
        if (!legal(v, a) || !legal(v, b) || !legal(a, b)) continue;

        QuadMerge m;
        m.quad = q;
        const bool on_quad = gp.face_of(d0) == q;
        const FaceId other = gp.face_of(on_quad ? PlaneGraph::twin(d0) : d0);
        m.neighbor = origin_[other];
        m.removed = PlaneGraph::edge_of(d0);
        m.u = u;
        m.v = v;
        m.w_q = on_quad ? a : b;
        m.w_f = on_quad ? b : a;
        skip_[q] = 1;
        if (m.neighbor < static_cast<int>(skip_.size())) skip_[m.neighbor] = 1;

        const Dart from_v = gp.next(d0);
        const Dart from_b = gp.next(out_u);
        gp.remove_edge(m.removed);
        const FaceId merged = gp.face_of(from_v);
        origin_[merged] = q;
        m.inserted[0] = join(from_v, from_b);
        m.inserted[1] = join(from_v, into_u);
        m.inserted[2] = join(into_u, gp.dart(b, v));
        r_.merges.push_back(m);
        return;
      }
    }
    throw Error(ErrorCode::kUntriangulatableFace,
                "no edge of quad " + std::to_string(q) +
                    " admits the merge construction");
  }

  std::pair<int, int> pick_diagonal(const std::vector<Dart>& w) const {
    const int k = static_cast<int>(w.size());
    for (int i = 0; i < k; ++i) {
      if (legal(h().tail(w[i]), h().tail(w[(i + 2) % k]))) {
        return {i, (i + 2) % k};
      }
    }
    for (int i = 0; i < k; ++i) {
      for (int j = i + 3; j < k; ++j) {
        if (i == 0 && j == k - 1) continue;
        if (legal(h().tail(w[i]), h().tail(w[j]))) return {i, j};
      }
    }
    return {-1, -1};
  }

  void fill(FaceId start) {
    std::vector<FaceId> todo{start};
    while (!todo.empty()) {
      const FaceId f = todo.back();
      todo.pop_back();
      const auto walks = h().face_walks(f);
      if (walks.size() > 1) {
        join(boundary(walks[0]).front(), boundary(walks[1]).front());
        todo.push_back(f);
        continue;
      }
      const auto w = boundary(walks.front());
      if (w.size() == 3) continue;
      const auto [i, j] = w.size() < 3 ? std::pair{-1, -1} : pick_diagonal(w);
      if (i < 0) {
        throw Error(ErrorCode::kUntriangulatableFace,
                    "face " + std::to_string(f) + " admits no new diagonal");
      }
      const EdgeId e = join(w[i], w[j]);
      todo.push_back(h().face_of(2 * e));
      todo.push_back(h().face_of(2 * e + 1));
    }
  }

  const PlaneGraph& g_;
  TriangulationResult r_;
  std::vector<char> skip_;
  std::vector<FaceId> origin_;
};

}  // namespace

TriangulationResult triangulate(const PlaneGraph& g, TriangulationMode mode,
                                const std::optional<std::vector<FaceId>>& marked) {
  if (g.vertex_count() < 3) {
    throw Error(ErrorCode::kPreconditionFailed, "needs at least three vertices");
  }
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 0) {
      throw Error(ErrorCode::kPreconditionFailed,
                  "isolated vertex " + std::to_string(v));
    }
  }
  Triangulator t(g);
  if (mode == TriangulationMode::kThreeHop) {
    const std::vector<FaceId> quads = marked ? *marked : quad_faces(g);
    for (std::size_t i = 0; i < quads.size(); ++i) {
      if (!g.has_face(quads[i]) || !g.is_quad(quads[i])) {
        throw Error(ErrorCode::kPreconditionFailed,
                    "face " + std::to_string(quads[i]) + " is not a 4-face");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (face_hop_distance(g, quads[i], quads[j]) < 3) {
          throw Error(ErrorCode::kQuadsTooClose,
                      "faces " + std::to_string(quads[j]) + " and " +
                          std::to_string(quads[i]));
        }
      }
    }
    t.merge_quads(quads);
  }
  t.special_rules();
  t.fill_all();
  TriangulationResult r = t.take();
  const PlaneGraph& gp = r.supergraph;
  for (FaceId f : gp.faces()) {
    if (!gp.is_triangle(f)) {
      throw Error(ErrorCode::kInvariantViolated,
                  "face " + std::to_string(f) + " left untriangulated");
    }
  }
  if (gp.edge_count() != 3 * gp.vertex_count() - 6) {
    throw Error(ErrorCode::kInvariantViolated, "triangulation is not maximal");
  }
  return r;
}

}  // namespace edgeguard
