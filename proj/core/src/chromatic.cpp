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

#include "edgeguard/chromatic.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>
#include <vector>

#include "edgeguard/analysis.hpp"
#include "edgeguard/errors.hpp"
#include "edgeguard/reductions.hpp"
#include "step_builder.hpp"

namespace edgeguard {
namespace {

constexpr std::array<std::pair<int, int>, 6> kPairs = {
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
// Index pairs into kPairs whose matchings are united.
constexpr std::array<std::pair<int, int>, 3> kPairings = {{{0, 5}, {1, 4}, {2, 3}}};

PlaneGraph strip_isolated(const PlaneGraph& g) {
  std::vector<VertexId> lonely;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 0) lonely.push_back(v);
  }
  PlaneGraph h = g;
  if (!lonely.empty()) h.delete_vertices(lonely);
  return h;
}

int boundary_vertex_count(const PlaneGraph& g) {
  int n = 0;
  for (VertexId v : g.vertices()) n += g.degree(v) > 0;
  return n;
}

// Seeds first, then edges in id order with both ends in `in`.
std::vector<EdgeId> maximal_matching(const PlaneGraph& g,
                                     const std::vector<char>& in,
                                     const std::vector<EdgeId>& seeds = {}) {
  std::vector<char> used(g.vertex_slots(), 0);
  std::vector<EdgeId> out;
  auto take = [&](EdgeId e) {
    const auto [a, b] = g.endpoints(e);
    if (!in[a] || !in[b] || used[a] || used[b]) return;
    used[a] = used[b] = 1;
    out.push_back(e);
  };
  for (EdgeId e : seeds) take(e);
  for (EdgeId e : g.edges()) take(e);
  std::sort(out.begin(), out.end());
  return out;
}

// The matching plus the lowest incident edge of every unmatched vertex of `in`.
std::vector<EdgeId> complete_over(const PlaneGraph& g, const std::vector<char>& in,
                                  const std::vector<EdgeId>& matching) {
  std::vector<char> covered(g.vertex_slots(), 0);
  for (EdgeId e : matching) {
    const auto [a, b] = g.endpoints(e);
    covered[a] = covered[b] = 1;
  }
  std::vector<EdgeId> out = matching;
  for (VertexId v : g.vertices()) {
    if (!in[v] || covered[v] || g.degree(v) == 0) continue;
    EdgeId low = PlaneGraph::edge_of(g.rotation(v).front());
    for (Dart d : g.rotation(v)) low = std::min(low, PlaneGraph::edge_of(d));
    out.push_back(low);
  }
  return out;
}

EdgeId lowest_boundary_edge(const PlaneGraph& g, FaceId f) {
  EdgeId low = kNone;
  for (const auto& walk : g.face_walks(f)) {
    for (Dart d : walk) {
      const EdgeId e = PlaneGraph::edge_of(d);
      if (low == kNone || e < low) low = e;
    }
  }
  return low;
}

GuardSet make_set(std::vector<EdgeId> edges, std::string algorithm,
                  const Rational& bound) {
  GuardSet gs;
  gs.edges = std::move(edges);
  gs.algorithm = std::move(algorithm);
  gs.bound = bound;
  gs.normalize();
  return gs;
}

void require_guards(const PlaneGraph& g, const GuardSet& gs,
                    const std::string& what) {
  if (!verify_guard_set(g, gs).guarded) {
    throw Error(ErrorCode::kInvariantViolated, what + " does not guard every face");
  }
}

void require_colors_per_face(const PlaneGraph& g, const std::vector<int>& colors) {
  for (FaceId f : g.faces()) {
    std::array<bool, 4> seen{};
    int distinct = 0;
    for (const auto& walk : g.face_walks(f)) {
      for (Dart d : walk) {
        const int c = colors[g.tail(d)];
        if (!seen[c]) {
          seen[c] = true;
          ++distinct;
        }
      }
    }
    if (distinct < 3) {
      throw Error(ErrorCode::kColoringMismatch,
                  "face " + std::to_string(f) + " sees " +
                      std::to_string(distinct) + " colors");
    }
  }
}

template <typename Sets>
std::size_t smallest(const Sets& sets) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < sets.size(); ++i) {
    if (sets[i].size() < sets[best].size()) best = i;
  }
  return best;
}

void require_input(const PlaneGraph& g) {
  if (g.vertex_count() < 3 || g.edge_count() == 0) {
    throw Error(ErrorCode::kPreconditionFailed,
                "needs at least three vertices and one edge");
  }
}

}  // namespace

ColorGuardSets guard_sets_from_coloring(const PlaneGraph& g,
                                        const VertexColoring& col) {
  if (static_cast<int>(col.colors.size()) != g.vertex_slots()) {
    throw Error(ErrorCode::kColoringMismatch, "coloring size differs from graph");
  }
  for (VertexId v : g.vertices()) {
    if (col.colors[v] < 0 || col.colors[v] > 3) {
      throw Error(ErrorCode::kColoringMismatch,
                  "vertex " + std::to_string(v) + " has no color");
    }
  }
  for (EdgeId e : g.edges()) {
    const auto [a, b] = g.endpoints(e);
    if (col.colors[a] == col.colors[b]) {
      throw Error(ErrorCode::kColoringMismatch,
                  "edge " + std::to_string(e) + " is monochromatic");
    }
  }
  require_colors_per_face(g, col.colors);

  const int n = boundary_vertex_count(g);
  const Rational bound =
      Rational(n, 3) + Rational(static_cast<int>(quad_faces(g).size()), 9);
  ColorGuardSets out;
  std::array<std::vector<EdgeId>, 6> matchings;
  for (int p = 0; p < 6; ++p) {
    const auto [i, j] = kPairs[p];
    std::vector<char> in(g.vertex_slots(), 0);
    for (VertexId v : g.vertices()) {
      const int c = col.colors[v];
      in[v] = g.degree(v) > 0 && (c == i || c == j);
      out.class_sizes[p] += in[v];
    }
    matchings[p] = maximal_matching(g, in);
    out.matching_sizes[p] = static_cast<int>(matchings[p].size());
    out.sets[p] = make_set(complete_over(g, in, matchings[p]), "chromatic", bound);
    if (out.sets[p].size() != out.class_sizes[p] - out.matching_sizes[p]) {
      throw Error(ErrorCode::kInvariantViolated, "class accounting is off");
    }
  }
  for (int k = 0; k < 3; ++k) {
    const auto [a, b] = kPairings[k];
    std::vector<EdgeId> edges = matchings[a];
    edges.insert(edges.end(), matchings[b].begin(), matchings[b].end());
    for (FaceId f : g.faces()) {
      if (guards_face(g, edges, f)) continue;
      edges.push_back(lowest_boundary_edge(g, f));
      ++out.augmentations;
    }
    out.sets[6 + k] = make_set(std::move(edges), "chromatic", bound);
  }
  int total = 0;
  for (int s = 0; s < 9; ++s) {
    require_guards(g, out.sets[s],
                   "color set " + std::string(kColorSetNames[s]));
    total += out.sets[s].size();
  }
  if (total != 3 * n + out.augmentations) {
    throw Error(ErrorCode::kInvariantViolated,
                "nine sets hold " + std::to_string(total) + " edges");
  }
  return out;
}

GuardSet chromatic_guard(const PlaneGraph& g, const ColoringOptions& opts) {
  require_input(g);
  const PlaneGraph h = strip_isolated(g);
  const int n = h.vertex_count();
  const int alpha = static_cast<int>(quad_faces(h).size());
  const Rational bound = Rational(n, 3) + Rational(alpha, 9);
  GuardSet out;
  if (h.face_count() == 1) {
    out = make_set({h.edges().front()}, "chromatic", bound);
  } else {
    const TriangulationResult t = triangulate(h);
    const ColorGuardSets sets =
        guard_sets_from_coloring(h, four_color(t.supergraph, opts));
    out = sets.sets[smallest(sets.sets)];
    if (out.size() > std::max(1, (3 * n + alpha) / 9)) {
      throw Error(ErrorCode::kInvariantViolated, "smallest color set over bound");
    }
  }
  if (!verify_guard_set(g, out).guarded) {
    throw Error(ErrorCode::kVerificationFailed, "chromatic set leaves a face open");
  }
  return out;
}

std::array<GuardSet, 3> guard_sets_from_guard_coloring(const PlaneGraph& g,
                                                       const TwoColoring& tc) {
  if (!is_guard_coloring(g, tc)) {
    throw Error(ErrorCode::kNotAGuardColoring, "coloring fails some face");
  }
  const int n = boundary_vertex_count(g);
  std::array<std::vector<char>, 2> in;
  std::array<std::vector<EdgeId>, 2> m;
  for (int s = 0; s < 2; ++s) {
    in[s].assign(g.vertex_slots(), 0);
    for (VertexId v : g.vertices()) in[s][v] = g.degree(v) > 0 && tc.sides[v] == s;
    m[s] = maximal_matching(g, in[s]);
  }
  std::vector<EdgeId> both = m[0];
  both.insert(both.end(), m[1].begin(), m[1].end());
  std::array<GuardSet, 3> out = {
      make_set(std::move(both), "guard-coloring", Rational(n, 3)),
      make_set(complete_over(g, in[0], m[0]), "guard-coloring", Rational(n, 3)),
      make_set(complete_over(g, in[1], m[1]), "guard-coloring", Rational(n, 3))};
  int total = 0;
  for (const GuardSet& gs : out) {
    require_guards(g, gs, "guard-coloring set");
    total += gs.size();
  }
  if (total != n) {
    throw Error(ErrorCode::kInvariantViolated,
                "three sets hold " + std::to_string(total) + " edges");
  }
  return out;
}

GuardSet guard_from_guard_coloring(const PlaneGraph& g, const TwoColoring& tc) {
  const auto sets = guard_sets_from_guard_coloring(g, tc);
  return sets[smallest(sets)];
}

namespace {

// Quads of g that survive unchanged as faces of h, as face ids of h.
std::vector<FaceId> surviving_quads(const PlaneGraph& g, const PlaneGraph& h) {
  std::vector<FaceId> out;
  for (FaceId q : quad_faces(g)) {
    auto walk = g.face_walks(q).front();
    if (!std::all_of(walk.begin(), walk.end(), [&](Dart d) {
          return h.has_edge(PlaneGraph::edge_of(d));
        })) {
      continue;
    }
    const FaceId f = h.face_of(walk.front());
    if (!h.is_quad(f)) continue;
    auto now = h.face_walks(f).front();
    std::sort(walk.begin(), walk.end());
    std::sort(now.begin(), now.end());
    if (walk == now) out.push_back(f);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// An edge of h incident to q whose endpoints share a class.
EdgeId seed_for(const PlaneGraph& h, const TriangulationResult& t, FaceId q,
                const std::vector<int>& cls) {
  for (const QuadMerge& m : t.merges) {
    if (m.quad != q) continue;
    VertexId best = kNone;
    for (VertexId x : {m.v, m.w_q, m.w_f}) {
      if (cls[x] == cls[m.u] && (best == kNone || x < best)) best = x;
    }
    if (best == kNone) break;
    return *h.find_edge(m.u, best);
  }
  const auto quad_walks = h.face_walks(q);
  for (Dart d : quad_walks.front()) {
    const FaceId tri = h.face_of(PlaneGraph::twin(d));
    if (!h.is_triangle(tri)) continue;
    EdgeId best = kNone;
    const auto tri_walks = h.face_walks(tri);
    for (Dart x : tri_walks.front()) {
      const EdgeId e = PlaneGraph::edge_of(x);
      if (cls[h.tail(x)] == cls[h.head(x)] && (best == kNone || e < best)) best = e;
    }
    if (best != kNone) return best;
  }
  throw Error(ErrorCode::kInvariantViolated,
              "quad " + std::to_string(q) + " has no seed edge");
}

}  // namespace

GuardSet three_hop_guard(const PlaneGraph& g, ThreeHopReport* report,
                         const ColoringOptions& opts) {
  require_input(g);
  if (min_quad_hop_distance(g) < 3) {
    throw Error(ErrorCode::kQuadsTooClose, "two 4-faces lie within two hops");
  }
  ThreeHopReport rep;
  const Rational bound(g.vertex_count(), 3);
  const int cap = std::max(1, g.vertex_count() / 3);
  GuardSet out;
  out.algorithm = "3hop";
  out.bound = bound;
  if (g.face_count() == 1) {
    out.edges = {g.edges().front()};
    if (report) *report = rep;
    return out;
  }

  PlaneGraph h = g;
  while (!is_forest(h)) {
    auto step = find_low_degree_step(h, true);
    if (!step) break;
    if (!step_is_valid(h, *step, Rational(1, 3))) {
      throw Error(ErrorCode::kInvariantViolated, "invalid low-degree step");
    }
    rep.reduction_edges.insert(rep.reduction_edges.end(),
                               step->guard_edges.begin(), step->guard_edges.end());
    h.delete_vertices(step->removed_vertices);
  }
  std::vector<EdgeId> edges = rep.reduction_edges;
  rep.residual_vertices = is_forest(h) ? 0 : h.vertex_count();

  if (!is_forest(h)) {
    if (detail::min_degree(h) < 3) {
      throw Error(ErrorCode::kStepNotFound, "low-degree vertex left unreduced");
    }
    const std::vector<FaceId> marked = surviving_quads(g, h);
    const TriangulationResult t = triangulate(h, TriangulationMode::kThreeHop, marked);
    const VertexColoring col = four_color(t.supergraph, opts);
    require_colors_per_face(h, col.colors);

    std::vector<int> cls(h.vertex_slots(), kNone);
    for (VertexId v : h.vertices()) cls[v] = col.colors[v] < 2 ? 0 : 1;
    std::array<std::vector<EdgeId>, 2> seeds;
    std::vector<char> used(h.vertex_slots(), 0);
    for (FaceId q : marked) {
      const EdgeId e = seed_for(h, t, q, cls);
      const auto [a, b] = h.endpoints(e);
      if (used[a] || used[b]) {
        throw Error(ErrorCode::kSeedConflict,
                    "seed edge " + std::to_string(e) + " touches another seed");
      }
      used[a] = used[b] = 1;
      seeds[cls[a]].push_back(e);
      rep.seeds.push_back(e);
    }
    std::sort(rep.seeds.begin(), rep.seeds.end());

    std::array<std::vector<char>, 2> in;
    std::array<std::vector<EdgeId>, 2> m;
    for (int s = 0; s < 2; ++s) {
      in[s].assign(h.vertex_slots(), 0);
      for (VertexId v : h.vertices()) in[s][v] = cls[v] == s;
      m[s] = maximal_matching(h, in[s], seeds[s]);
    }
    std::vector<EdgeId> paired = m[0];
    paired.insert(paired.end(), m[1].begin(), m[1].end());
    const std::array<std::vector<EdgeId>, 3> candidates = {
        complete_over(h, in[0], m[0]), complete_over(h, in[1], m[1]), paired};
    constexpr std::array<std::string_view, 3> kNames = {"12", "34", "1234"};
    std::size_t total = 0;
    std::size_t best = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      total += candidates[i].size();
      std::vector<EdgeId> all = edges;
      all.insert(all.end(), candidates[i].begin(), candidates[i].end());
      require_guards(g, make_set(std::move(all), "3hop", bound),
                     "three-hop set " + std::string(kNames[i]));
      if (candidates[i].size() < candidates[best].size()) best = i;
    }
    if (static_cast<int>(total) != h.vertex_count()) {
      throw Error(ErrorCode::kInvariantViolated,
                  "three sets hold " + std::to_string(total) + " edges");
    }
    edges.insert(edges.end(), candidates[best].begin(), candidates[best].end());
    rep.chosen = kNames[best];
  }

  out.edges = std::move(edges);
  out.normalize();
  if (!verify_guard_set(g, out).guarded) {
    throw Error(ErrorCode::kVerificationFailed, "three-hop set leaves a face open");
  }
  if (out.size() > cap) {
    throw Error(ErrorCode::kInvariantViolated, "three-hop set over bound");
  }
  if (report) *report = std::move(rep);
  return out;
}

}  // namespace edgeguard
