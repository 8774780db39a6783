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

#include "edgeguard/plane_graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>
#include <unordered_map>

#include "edgeguard/errors.hpp"

namespace edgeguard {

namespace {

[[noreturn]] void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

std::uint64_t pair_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

std::vector<std::vector<VertexId>> connected_components(const PlaneGraph& g) {
  std::vector<int> seen(g.vertex_slots(), 0);
  std::vector<std::vector<VertexId>> out;
  for (VertexId s : g.vertices()) {
    if (seen[s]) continue;
    std::vector<VertexId> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Dart d : g.rotation(comp[i])) {
        const VertexId w = g.head(d);
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

PlaneGraph PlaneGraph::build(const RotationSystem& spec) {
  const int n = spec.n;
  if (n < 1) fail(ErrorCode::kMalformedRotation, "graph needs a vertex");
  if (static_cast<int>(spec.rotations.size()) != n) {
    fail(ErrorCode::kMalformedRotation, "rotation count differs from n");
  }
  if (spec.coords && static_cast<int>(spec.coords->size()) != n) {
    fail(ErrorCode::kMalformedDocument, "coordinate count differs from n");
  }
  std::vector<std::vector<VertexId>> sorted(n);
  for (int u = 0; u < n; ++u) {
    for (VertexId v : spec.rotations[u]) {
      if (v < 0 || v >= n) {
        fail(ErrorCode::kMalformedRotation,
             "vertex " + std::to_string(u) + " lists unknown neighbor " +
                 std::to_string(v));
      }
      if (v == u) {
        fail(ErrorCode::kMalformedRotation,
             "self-loop at " + std::to_string(u));
      }
    }
    sorted[u] = spec.rotations[u];
    std::sort(sorted[u].begin(), sorted[u].end());
    if (std::adjacent_find(sorted[u].begin(), sorted[u].end()) !=
        sorted[u].end()) {
      fail(ErrorCode::kMalformedRotation,
           "duplicate neighbor at " + std::to_string(u));
    }
  }
  for (int u = 0; u < n; ++u) {
    for (VertexId v : sorted[u]) {
      if (!std::binary_search(sorted[v].begin(), sorted[v].end(), u)) {
        fail(ErrorCode::kMalformedRotation,
             "edge " + std::to_string(u) + "-" + std::to_string(v) +
                 " is not listed at both ends");
      }
    }
  }

  PlaneGraph g;
  g.v_alive_.assign(n, 1);
  g.rot_.resize(n);
  g.iso_face_.assign(n, kNone);
  g.live_vertices_ = n;
  g.coords_ = spec.coords;
  std::unordered_map<std::uint64_t, EdgeId> ids;
  for (int u = 0; u < n; ++u) {
    for (VertexId v : spec.rotations[u]) {
      if (u < v) {
        ids[pair_key(u, v)] = static_cast<EdgeId>(g.edges_.size());
        g.edges_.push_back({u, v, true});
      }
    }
  }
  g.live_edges_ = static_cast<int>(g.edges_.size());
  g.pos_.assign(2 * g.edges_.size(), 0);
  g.dart_walk_.assign(2 * g.edges_.size(), kNone);
  for (int u = 0; u < n; ++u) {
    for (VertexId v : spec.rotations[u]) {
      const EdgeId e = ids[pair_key(u, v)];
      const Dart d = u < v ? 2 * e : 2 * e + 1;
      g.pos_[d] = static_cast<int>(g.rot_[u].size());
      g.rot_[u].push_back(d);
    }
  }

  const auto comps = connected_components(g);
  const int c = static_cast<int>(comps.size());
  std::vector<int> first_walk(c, 0);
  std::vector<int> walk_count(c, 0);
  for (int i = 0; i < c; ++i) {
    first_walk[i] = static_cast<int>(g.walks_.size());
    int darts = 0;
    for (VertexId v : comps[i]) {
      for (Dart d : g.rot_[v]) {
        ++darts;
        if (g.dart_walk_[d] == kNone) g.trace_walk(d, kNone, false);
      }
    }
    walk_count[i] = static_cast<int>(g.walks_.size()) - first_walk[i];
    if (darts > 0) {
      const int vc = static_cast<int>(comps[i].size());
      if (vc - darts / 2 + walk_count[i] != 2) {
        fail(ErrorCode::kNonPlanarEmbedding,
             "component of vertex " + std::to_string(comps[i][0]) +
                 " traces " + std::to_string(walk_count[i]) +
                 " walks; a plane embedding needs " +
                 std::to_string(2 - vc + darts / 2));
      }
    }
  }

  std::vector<int> hint(c, kNone);
  for (std::size_t h = 0; h < spec.nesting.size(); ++h) {
    const NestingHint& nh = spec.nesting[h];
    if (nh.component < 0 || nh.component >= c || nh.inside_component < 0 ||
        nh.inside_component >= c) {
      fail(ErrorCode::kBadNesting, "nesting entry " + std::to_string(h) +
                                       " names an unknown component");
    }
    if (nh.component == nh.inside_component) {
      fail(ErrorCode::kBadNesting, "component " + std::to_string(nh.component) +
                                       " nested inside itself");
    }
    if (nh.walk < 0 || nh.walk >= walk_count[nh.inside_component]) {
      fail(ErrorCode::kBadNesting, "nesting entry " + std::to_string(h) +
                                       " names an unknown walk");
    }
    if (hint[nh.component] != kNone) {
      fail(ErrorCode::kBadNesting, "component " + std::to_string(nh.component) +
                                       " nested twice");
    }
    hint[nh.component] = static_cast<int>(h);
  }
  // Key of the face containing each component: the slot of a hosting walk,
  // or -2 for the unbounded face.
  constexpr int kUnbounded = -2;
  std::vector<int> parent(c, kNone);
  for (int i = 0; i < c; ++i) {
    std::vector<int> chain;
    int cur = i;
    while (parent[cur] == kNone) {
      if (std::find(chain.begin(), chain.end(), cur) != chain.end()) {
        fail(ErrorCode::kBadNesting, "nesting hints form a cycle");
      }
      chain.push_back(cur);
      if (hint[cur] == kNone) {
        parent[cur] = kUnbounded;
        break;
      }
      const NestingHint& nh = spec.nesting[hint[cur]];
      if (nh.walk > 0) {
        parent[cur] = first_walk[nh.inside_component] + nh.walk;
        break;
      }
      cur = nh.inside_component;
    }
    for (int x : chain) parent[x] = parent[cur];
  }
  // Cycles through bounded walks are rejected as well.
  for (int i = 0; i < c; ++i) {
    int cur = i;
    for (int steps = 0; hint[cur] != kNone; ++steps) {
      if (steps > c) fail(ErrorCode::kBadNesting, "nesting hints form a cycle");
      cur = spec.nesting[hint[cur]].inside_component;
    }
  }

  std::unordered_map<int, FaceId> face_of_key;
  auto face_for = [&](int key) {
    auto it = face_of_key.find(key);
    if (it != face_of_key.end()) return it->second;
    const FaceId f = g.new_face();
    face_of_key.emplace(key, f);
    return f;
  };
  for (int i = 0; i < c; ++i) {
    if (walk_count[i] == 0) {
      g.add_isolated(comps[i][0], face_for(parent[i]));
      continue;
    }
    for (int w = first_walk[i]; w < first_walk[i] + walk_count[i]; ++w) {
      const bool outer = w == first_walk[i];
      const FaceId f = face_for(outer ? parent[i] : w);
      g.walks_[w].face = f;
      g.walks_[w].outer = outer;
      g.faces_[f].walks.push_back(w);
    }
  }
  return g;
}

RotationSystem PlaneGraph::serialize(std::vector<VertexId>* relabel) const {
  std::vector<VertexId> label(vertex_slots(), kNone);
  int k = 0;
  for (VertexId v = 0; v < vertex_slots(); ++v) {
    if (v_alive_[v]) label[v] = k++;
  }
  const auto comps = connected_components(*this);
  std::vector<int> start(vertex_slots(), 0);
  for (const auto& comp : comps) {
    const VertexId m = comp[0];
    if (rot_[m].empty()) continue;
    int outer = kNone;
    for (VertexId v : comp) {
      for (Dart d : rot_[v]) {
        if (walks_[dart_walk_[d]].outer) outer = dart_walk_[d];
      }
    }
    if (outer == kNone) fail(ErrorCode::kInvariantViolated, "no outer walk");
    VertexId r = kNone;
    for (Dart d : walks_[outer].darts) {
      if (r == kNone || tail(d) < r) r = tail(d);
    }
    std::swap(label[m], label[r]);
    for (int i = 0; i < degree(r); ++i) {
      if (dart_walk_[rot_[r][i]] == outer) {
        start[r] = i;
        break;
      }
    }
  }

  RotationSystem out;
  out.n = k;
  out.rotations.resize(k);
  for (VertexId v = 0; v < vertex_slots(); ++v) {
    if (!v_alive_[v]) continue;
    auto& r = out.rotations[label[v]];
    const int deg = degree(v);
    for (int i = 0; i < deg; ++i) {
      r.push_back(label[head(rot_[v][(start[v] + i) % deg])]);
    }
  }
  if (coords_) {
    out.coords.emplace(k);
    for (VertexId v = 0; v < vertex_slots(); ++v) {
      if (v_alive_[v]) (*out.coords)[label[v]] = (*coords_)[v];
    }
  }

  const PlaneGraph flat = build(out);
  const auto flat_comps = connected_components(flat);
  std::vector<int> comp_of(k, 0);
  std::vector<int> flat_first(flat_comps.size(), 0);
  for (std::size_t i = 0; i < flat_comps.size(); ++i) {
    for (VertexId v : flat_comps[i]) comp_of[v] = static_cast<int>(i);
    const VertexId m = flat_comps[i][0];
    if (!flat.rot_[m].empty()) {
      flat_first[i] = flat.dart_walk_[flat.rot_[m][0]];
    }
  }
  std::vector<std::pair<int, NestingHint>> hints;
  for (const auto& comp : comps) {
    const VertexId m = comp[0];
    FaceId f = iso_face_[m];
    if (f == kNone) {
      for (VertexId v : comp) {
        for (Dart d : rot_[v]) {
          if (walks_[dart_walk_[d]].outer) f = walks_[dart_walk_[d]].face;
        }
      }
    }
    const std::vector<Dart>* host = host_walk(f);
    if (host == nullptr) continue;
    const Dart h = host->front();
    const Dart fd = flat.dart(label[tail(h)], label[head(h)]);
    const int j = comp_of[label[tail(h)]];
    NestingHint nh;
    nh.component = comp_of[label[m]];
    nh.inside_component = j;
    nh.walk = flat.dart_walk_[fd] - flat_first[j];
    hints.emplace_back(nh.component, nh);
  }
  std::sort(hints.begin(), hints.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (const auto& [unused, nh] : hints) out.nesting.push_back(nh);
  if (relabel) *relabel = label;
  return out;
}

int PlaneGraph::component_count() const {
  return static_cast<int>(connected_components(*this).size());
}

bool PlaneGraph::has_vertex(VertexId v) const {
  return v >= 0 && v < vertex_slots() && v_alive_[v];
}

bool PlaneGraph::has_edge(EdgeId e) const {
  return e >= 0 && e < edge_slots() && edges_[e].alive;
}

bool PlaneGraph::has_face(FaceId f) const {
  return f >= 0 && f < face_slots() && faces_[f].alive;
}

void PlaneGraph::require_vertex(VertexId v) const {
  if (!has_vertex(v)) {
    fail(ErrorCode::kUnknownVertex, "vertex " + std::to_string(v));
  }
}

void PlaneGraph::require_edge(EdgeId e) const {
  if (!has_edge(e)) fail(ErrorCode::kUnknownEdge, "edge " + std::to_string(e));
}

void PlaneGraph::require_face(FaceId f) const {
  if (!has_face(f)) fail(ErrorCode::kUnknownFace, "face " + std::to_string(f));
}

std::vector<VertexId> PlaneGraph::vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < vertex_slots(); ++v) {
    if (v_alive_[v]) out.push_back(v);
  }
  return out;
}

std::vector<EdgeId> PlaneGraph::edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edge_slots(); ++e) {
    if (edges_[e].alive) out.push_back(e);
  }
  return out;
}

std::vector<FaceId> PlaneGraph::faces() const {
  std::vector<FaceId> out;
  for (FaceId f = 0; f < face_slots(); ++f) {
    if (faces_[f].alive) out.push_back(f);
  }
  return out;
}

std::vector<VertexId> PlaneGraph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  out.reserve(rot_[v].size());
  for (Dart d : rot_[v]) out.push_back(head(d));
  return out;
}

std::pair<VertexId, VertexId> PlaneGraph::endpoints(EdgeId e) const {
  require_edge(e);
  return {edges_[e].u, edges_[e].v};
}

std::optional<EdgeId> PlaneGraph::find_edge(VertexId u, VertexId v) const {
  if (!has_vertex(u) || !has_vertex(v)) return std::nullopt;
  if (rot_[u].size() > rot_[v].size()) std::swap(u, v);
  for (Dart d : rot_[u]) {
    if (head(d) == v) return edge_of(d);
  }
  return std::nullopt;
}

Dart PlaneGraph::dart(VertexId u, VertexId v) const {
  const auto e = find_edge(u, v);
  if (!e) {
    fail(ErrorCode::kUnknownEdge,
         "no edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  return edges_[*e].u == u ? 2 * *e : 2 * *e + 1;
}

Dart PlaneGraph::next(Dart d) const {
  const Dart t = d ^ 1;
  const auto& r = rot_[tail(t)];
  return r[(pos_[t] + 1) % r.size()];
}

Dart PlaneGraph::prev(Dart d) const {
  const auto& r = rot_[tail(d)];
  return r[(pos_[d] + r.size() - 1) % r.size()] ^ 1;
}

std::vector<std::vector<Dart>> PlaneGraph::face_walks(FaceId f) const {
  require_face(f);
  std::vector<std::vector<Dart>> out;
  for (int w : faces_[f].walks) out.push_back(walks_[w].darts);
  return out;
}

const std::vector<Dart>* PlaneGraph::host_walk(FaceId f) const {
  for (int w : faces_[f].walks) {
    if (!walks_[w].outer) return &walks_[w].darts;
  }
  return nullptr;
}

std::vector<VertexId> PlaneGraph::face_vertices(FaceId f) const {
  require_face(f);
  std::vector<VertexId> out = faces_[f].isolated;
  for (int w : faces_[f].walks) {
    for (Dart d : walks_[w].darts) out.push_back(tail(d));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool PlaneGraph::on_face(VertexId v, FaceId f) const {
  if (iso_face_[v] != kNone) return iso_face_[v] == f;
  for (Dart d : rot_[v]) {
    if (face_of(d) == f) return true;
  }
  return false;
}

int PlaneGraph::side_count(FaceId f) const {
  require_face(f);
  int s = 0;
  for (int w : faces_[f].walks) s += static_cast<int>(walks_[w].darts.size());
  return s;
}

bool PlaneGraph::is_simple_face(FaceId f, int k) const {
  const FaceRec& fr = faces_[f];
  if (fr.walks.size() != 1 || !fr.isolated.empty()) return false;
  const auto& darts = walks_[fr.walks[0]].darts;
  if (static_cast<int>(darts.size()) != k) return false;
  std::vector<VertexId> vs;
  for (Dart d : darts) vs.push_back(tail(d));
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

std::vector<VertexId> PlaneGraph::boundary_cycle(FaceId f) const {
  require_face(f);
  std::vector<VertexId> out;
  if (faces_[f].walks.empty()) return out;
  for (Dart d : walks_[faces_[f].walks[0]].darts) out.push_back(tail(d));
  return out;
}

std::vector<FaceId> PlaneGraph::faces_at(VertexId v) const {
  require_vertex(v);
  if (iso_face_[v] != kNone) return {iso_face_[v]};
  std::vector<FaceId> out;
  for (Dart d : rot_[v]) {
    const FaceId f = face_of(d);
    if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
  }
  return out;
}

std::pair<FaceId, FaceId> PlaneGraph::flanking_faces(EdgeId e) const {
  require_edge(e);
  return {face_of(2 * e), face_of(2 * e + 1)};
}

std::vector<Corner> PlaneGraph::corners_on(VertexId v, FaceId f) const {
  require_vertex(v);
  require_face(f);
  if (iso_face_[v] != kNone) {
    if (iso_face_[v] == f) return {Corner{v, kNone}};
    return {};
  }
  std::vector<Corner> out;
  for (Dart d : rot_[v]) {
    if (face_of(d) == f) out.push_back({v, d});
  }
  return out;
}

void PlaneGraph::set_coords(std::optional<std::vector<Point>> coords) {
  if (coords && static_cast<int>(coords->size()) != vertex_slots()) {
    fail(ErrorCode::kMalformedDocument, "coordinate count differs from n");
  }
  coords_ = std::move(coords);
}

int PlaneGraph::trace_walk(Dart start, FaceId f, bool outer) {
  const int w = static_cast<int>(walks_.size());
  WalkRec rec;
  rec.face = f;
  rec.outer = outer;
  rec.alive = true;
  Dart d = start;
  do {
    rec.darts.push_back(d);
    dart_walk_[d] = w;
    d = next(d);
  } while (d != start);
  walks_.push_back(std::move(rec));
  if (f != kNone) faces_[f].walks.push_back(w);
  return w;
}

void PlaneGraph::kill_walk(int w) {
  WalkRec& rec = walks_[w];
  auto& list = faces_[rec.face].walks;
  list.erase(std::find(list.begin(), list.end(), w));
  rec.alive = false;
  rec.darts.clear();
}

FaceId PlaneGraph::new_face() {
  faces_.push_back(FaceRec{{}, {}, true});
  ++live_faces_;
  return static_cast<FaceId>(faces_.size()) - 1;
}

void PlaneGraph::kill_face(FaceId f) {
  faces_[f].alive = false;
  faces_[f].walks.clear();
  faces_[f].isolated.clear();
  --live_faces_;
}

void PlaneGraph::add_isolated(VertexId v, FaceId f) {
  auto& iso = faces_[f].isolated;
  iso.insert(std::lower_bound(iso.begin(), iso.end(), v), v);
  iso_face_[v] = f;
}

void PlaneGraph::drop_isolated(VertexId v) {
  auto& iso = faces_[iso_face_[v]].isolated;
  iso.erase(std::find(iso.begin(), iso.end(), v));
  iso_face_[v] = kNone;
}

void PlaneGraph::rotation_insert(VertexId v, int index, Dart d) {
  auto& r = rot_[v];
  r.insert(r.begin() + index, d);
  for (int i = index; i < static_cast<int>(r.size()); ++i) pos_[r[i]] = i;
}

void PlaneGraph::rotation_erase(Dart d) {
  auto& r = rot_[tail(d)];
  const int index = pos_[d];
  r.erase(r.begin() + index);
  for (int i = index; i < static_cast<int>(r.size()); ++i) pos_[r[i]] = i;
}

FaceId PlaneGraph::corner_face(const Corner& c) const {
  require_vertex(c.vertex);
  if (c.out == kNone) {
    if (iso_face_[c.vertex] == kNone) {
      fail(ErrorCode::kNotOnFace, "vertex " + std::to_string(c.vertex) +
                                      " is not isolated; corner needs a dart");
    }
    return iso_face_[c.vertex];
  }
  if (c.out < 0 || c.out >= 2 * edge_slots() || !edges_[c.out >> 1].alive ||
      tail(c.out) != c.vertex) {
    fail(ErrorCode::kNotOnFace, "corner dart does not leave vertex " +
                                    std::to_string(c.vertex));
  }
  return face_of(c.out);
}

EdgeId PlaneGraph::insert_edge(VertexId u, VertexId v, FaceId f) {
  require_vertex(u);
  require_vertex(v);
  require_face(f);
  if (u == v) fail(ErrorCode::kMalformedRotation, "self-loop requested");
  if (adjacent(u, v)) {
    fail(ErrorCode::kEdgeExists,
         "edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  const auto cu = corners_on(u, f);
  const auto cv = corners_on(v, f);
  if (cu.empty() || cv.empty()) {
    fail(ErrorCode::kNotOnFace, "vertex " + std::to_string(cu.empty() ? u : v) +
                                    " is not on face " + std::to_string(f));
  }
  if (cu.size() > 1 || cv.size() > 1) {
    fail(ErrorCode::kAmbiguousOccurrence,
         "vertex " + std::to_string(cu.size() > 1 ? u : v) +
             " occurs more than once on face " + std::to_string(f));
  }
  return insert_edge_at(cu[0], cv[0]);
}

EdgeId PlaneGraph::insert_edge_at(Corner cu, Corner cv) {
  const VertexId u = cu.vertex;
  const VertexId v = cv.vertex;
  const FaceId f = corner_face(cu);
  if (u == v) fail(ErrorCode::kMalformedRotation, "self-loop requested");
  if (corner_face(cv) != f) {
    fail(ErrorCode::kNotOnFace, "corners of " + std::to_string(u) + " and " +
                                    std::to_string(v) +
                                    " lie on different faces");
  }
  if (adjacent(u, v)) {
    fail(ErrorCode::kEdgeExists,
         "edge " + std::to_string(u) + "-" + std::to_string(v));
  }
  const int wu = cu.out == kNone ? kNone : dart_walk_[cu.out];
  const int wv = cv.out == kNone ? kNone : dart_walk_[cv.out];

  const EdgeId e = edge_slots();
  edges_.push_back({u, v, true});
  ++live_edges_;
  const Dart x = 2 * e;
  const Dart y = 2 * e + 1;
  pos_.resize(2 * edges_.size(), 0);
  dart_walk_.resize(2 * edges_.size(), kNone);
  rotation_insert(u, cu.out == kNone ? 0 : pos_[cu.out], x);
  rotation_insert(v, cv.out == kNone ? 0 : pos_[cv.out], y);

  if (wu != kNone && wu == wv) {
    const bool outer = walks_[wu].outer;
    kill_walk(wu);
    trace_walk(y, f, outer);
    trace_walk(x, new_face(), false);
    return e;
  }
  bool outer = true;
  if (wu != kNone) {
    outer = outer && walks_[wu].outer;
    kill_walk(wu);
  } else {
    drop_isolated(u);
  }
  if (wv != kNone) {
    outer = outer && walks_[wv].outer;
    kill_walk(wv);
  } else {
    drop_isolated(v);
  }
  trace_walk(x, f, outer);
  return e;
}

void PlaneGraph::remove_edge(EdgeId e) {
  require_edge(e);
  const Dart x = 2 * e;
  const Dart y = 2 * e + 1;
  const VertexId u = edges_[e].u;
  const VertexId v = edges_[e].v;
  const int wx = dart_walk_[x];
  const int wy = dart_walk_[y];
  const Dart after_x = next(x);
  const Dart after_y = next(y);

  if (wx != wy) {
    const FaceId fx = walks_[wx].face;
    const FaceId fy = walks_[wy].face;
    if (fx == fy) {
      fail(ErrorCode::kInvariantViolated, "edge separates one face from itself");
    }
    const bool outer = walks_[wx].outer || walks_[wy].outer;
    kill_walk(wx);
    kill_walk(wy);
    const FaceId keep = std::min(fx, fy);
    const FaceId gone = std::max(fx, fy);
    for (int w : faces_[gone].walks) {
      walks_[w].face = keep;
      faces_[keep].walks.push_back(w);
    }
    for (VertexId iv : faces_[gone].isolated) add_isolated(iv, keep);
    kill_face(gone);
    rotation_erase(x);
    rotation_erase(y);
    edges_[e].alive = false;
    --live_edges_;
    trace_walk(after_x, keep, outer);
    return;
  }

  const FaceId f = walks_[wx].face;
  const bool outer = walks_[wx].outer;
  kill_walk(wx);
  rotation_erase(x);
  rotation_erase(y);
  edges_[e].alive = false;
  --live_edges_;
  const bool v_side = after_x != y;
  const bool u_side = after_y != x;

  bool u_outer = true;
  bool v_outer = true;
  if (!outer) {
    // The piece still reaching the component's outer walk keeps hosting f.
    std::vector<char> seen(vertex_slots(), 0);
    std::deque<VertexId> queue{u};
    seen[u] = 1;
    bool found = false;
    while (!queue.empty() && !found) {
      const VertexId a = queue.front();
      queue.pop_front();
      for (Dart d : rot_[a]) {
        const int w = dart_walk_[d];
        if (walks_[w].alive && walks_[w].outer) {
          found = true;
          break;
        }
        const VertexId b = head(d);
        if (!seen[b]) {
          seen[b] = 1;
          queue.push_back(b);
        }
      }
    }
    u_outer = !found;
    v_outer = found;
  }
  if (v_side) {
    trace_walk(after_x, f, v_outer);
  } else {
    add_isolated(v, f);
  }
  if (u_side) {
    trace_walk(after_y, f, u_outer);
  } else {
    add_isolated(u, f);
  }
}

void PlaneGraph::delete_vertices(std::span<const VertexId> victims) {
  for (VertexId v : victims) require_vertex(v);
  for (VertexId v : victims) {
    if (!v_alive_[v]) continue;
    while (!rot_[v].empty()) remove_edge(edge_of(rot_[v].front()));
    drop_isolated(v);
    v_alive_[v] = 0;
    --live_vertices_;
  }
}

void PlaneGraph::check_invariants() const {
  auto bad = [](const std::string& what) {
    fail(ErrorCode::kInvariantViolated, what);
  };
  int darts = 0;
  for (VertexId v = 0; v < vertex_slots(); ++v) {
    if (!v_alive_[v]) {
      if (!rot_[v].empty() || iso_face_[v] != kNone) bad("dead vertex in use");
      continue;
    }
    if (rot_[v].empty() != (iso_face_[v] != kNone)) {
      bad("isolation flag of " + std::to_string(v));
    }
    std::vector<VertexId> nb;
    for (int i = 0; i < degree(v); ++i) {
      const Dart d = rot_[v][i];
      if (!edges_[d >> 1].alive || tail(d) != v || pos_[d] != i) {
        bad("rotation of " + std::to_string(v));
      }
      if (head(d) == v) bad("self-loop at " + std::to_string(v));
      nb.push_back(head(d));
      ++darts;
    }
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) {
      bad("parallel edges at " + std::to_string(v));
    }
  }
  if (darts != 2 * live_edges_) bad("dart count");
  int dart_total = 0;
  int unbounded = 0;
  int faces = 0;
  for (FaceId f = 0; f < face_slots(); ++f) {
    const FaceRec& fr = faces_[f];
    if (!fr.alive) continue;
    ++faces;
    int hosts = 0;
    for (int w : fr.walks) {
      const WalkRec& wr = walks_[w];
      if (!wr.alive || wr.face != f) bad("walk registry of face " + std::to_string(f));
      if (!wr.outer) ++hosts;
      for (std::size_t i = 0; i < wr.darts.size(); ++i) {
        const Dart d = wr.darts[i];
        if (dart_walk_[d] != w) bad("dart ownership");
        if (next(d) != wr.darts[(i + 1) % wr.darts.size()]) bad("walk order");
      }
      dart_total += static_cast<int>(wr.darts.size());
    }
    for (VertexId iv : fr.isolated) {
      if (iso_face_[iv] != f) bad("isolated registry");
    }
    if (hosts > 1) bad("face " + std::to_string(f) + " has two host walks");
    if (hosts == 0) ++unbounded;
  }
  if (faces != live_faces_) bad("face count");
  if (dart_total != 2 * live_edges_) bad("walks do not partition the darts");
  if (unbounded != 1) bad("expected exactly one unbounded face");
  for (const auto& comp : connected_components(*this)) {
    if (rot_[comp[0]].empty()) continue;
    int outer = 0;
    std::vector<int> seen;
    for (VertexId v : comp) {
      for (Dart d : rot_[v]) {
        const int w = dart_walk_[d];
        if (walks_[w].outer &&
            std::find(seen.begin(), seen.end(), w) == seen.end()) {
          seen.push_back(w);
          ++outer;
        }
      }
    }
    if (outer != 1) bad("component needs exactly one outer walk");
  }
  const int c = component_count();
  if (live_vertices_ - live_edges_ + live_faces_ != 1 + c) bad("Euler formula");
}

}  // namespace edgeguard
