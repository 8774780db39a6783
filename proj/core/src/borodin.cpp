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

#include "edgeguard/errors.hpp"
#include "edgeguard/reductions.hpp"
#include "step_builder.hpp"

namespace edgeguard {

using detail::apex;
using detail::lowest_neighbor_except;
using detail::StepBuilder;

namespace {

const Rational kThreeEighths(3, 8);

bool weak(const PlaneGraph& g, EdgeId e) {
  return classify_edge(g, e) == EdgeStrength::kWeak;
}

bool semiweak(const PlaneGraph& g, EdgeId e) {
  return classify_edge(g, e) == EdgeStrength::kSemiweak;
}

// Neighbors of u along v's rotation, on either side of the dart v -> u.
std::pair<VertexId, VertexId> around(const PlaneGraph& g, VertexId v,
                                     VertexId u) {
  const auto& rot = g.rotation(v);
  const int k = static_cast<int>(rot.size());
  const int i = g.rotation_index(g.dart(v, u));
  return {g.head(rot[(i + k - 1) % k]), g.head(rot[(i + 1) % k])};
}

bool edge_rule_holds(const PlaneGraph& g, Rule tag, VertexId u, VertexId v,
                     EdgeId e) {
  const int du = g.degree(u);
  const int dv = g.degree(v);
  switch (tag) {
    case Rule::kL1: return du == 3 && dv <= 10 && weak(g, e);
    case Rule::kL2a: return du == 4 && dv <= 6 && weak(g, e);
    case Rule::kL2b: {
      if (du != 4 || dv != 7 || !weak(g, e)) return false;
      const auto [a, b] = around(g, v, u);
      return weak(g, *g.find_edge(v, a)) || weak(g, *g.find_edge(v, b));
    }
    case Rule::kL3:
      return du == 5 && detail::triangle_corners(g, u) >= 4 && dv <= 6 &&
             weak(g, e);
    case Rule::kL4: return du == 3 && dv <= 8 && semiweak(g, e);
    case Rule::kL5: return du == 4 && dv <= 5 && semiweak(g, e);
    default: return false;
  }
}

std::optional<FaceId> l6_face(const PlaneGraph& g, VertexId u, VertexId v) {
  if (g.degree(u) != 3 || g.degree(v) > 5) return std::nullopt;
  for (Dart d : {g.dart(u, v), g.dart(v, u)}) {
    if (g.side_count(g.face_of(d)) == 4) return g.face_of(d);
  }
  return std::nullopt;
}

bool l7_holds(const PlaneGraph& g, FaceId f) {
  if (g.side_count(f) != 5) return false;
  int threes = 0;
  for (VertexId x : g.face_vertices(f)) threes += g.degree(x) == 3;
  return threes >= 4;
}

bool holds(const PlaneGraph& g, const Configuration& cfg) {
  if (cfg.tag == Rule::kL7) return g.has_face(cfg.face) && l7_holds(g, cfg.face);
  if (!g.has_vertex(cfg.u) || !g.has_vertex(cfg.v)) return false;
  const auto e = g.find_edge(cfg.u, cfg.v);
  if (!e || *e != cfg.edge) return false;
  if (cfg.tag == Rule::kL6) {
    const auto f = l6_face(g, cfg.u, cfg.v);
    if (!f) return false;
    return g.has_face(cfg.face) && g.side_count(cfg.face) == 4 &&
           (g.face_of(g.dart(cfg.u, cfg.v)) == cfg.face ||
            g.face_of(g.dart(cfg.v, cfg.u)) == cfg.face);
  }
  return edge_rule_holds(g, cfg.tag, cfg.u, cfg.v, *e);
}

std::optional<ReductionStep> finish(StepBuilder& b, const PlaneGraph& g) {
  auto s = b.take();
  if (step_is_valid(g, s, kThreeEighths)) return s;
  return std::nullopt;
}

std::optional<ReductionStep> single_edge(const PlaneGraph& g, Rule tag,
                                         VertexId a, VertexId b, VertexId c) {
  StepBuilder sb(g, tag);
  if (!sb.add_edge(a, b)) return std::nullopt;
  sb.add_vertex(c);
  return finish(sb, g);
}

// Triangle edge opposite the 3-vertex u.
std::optional<ReductionStep> opposite_edge(const PlaneGraph& g, Rule tag,
                                           VertexId u, VertexId v) {
  for (Dart d : {g.dart(u, v), g.dart(v, u)}) {
    const auto p = apex(g, d);
    if (!p) continue;
    if (auto s = single_edge(g, tag, v, *p, u)) return s;
  }
  return std::nullopt;
}

// Apexes of the two triangles on (u, v): p left of u -> v, q left of v -> u.
std::optional<std::pair<VertexId, VertexId>> apexes(const PlaneGraph& g,
                                                    VertexId u, VertexId v) {
  const auto p = apex(g, g.dart(u, v));
  const auto q = apex(g, g.dart(v, u));
  if (!p || !q || *p == *q) return std::nullopt;
  return std::make_pair(*p, *q);
}

std::optional<ReductionStep> step_l2a(const PlaneGraph& g, VertexId u,
                                      VertexId v) {
  const auto pq = apexes(g, u, v);
  if (!pq) return std::nullopt;
  const auto [p, q] = *pq;
  if (g.adjacent(p, q)) return single_edge(g, Rule::kL2a, p, q, u);
  const auto pp = lowest_neighbor_except(g, p, {u, v, q});
  if (!pp) return std::nullopt;
  const auto qq = lowest_neighbor_except(g, q, {u, v, p, *pp});
  if (!qq) return std::nullopt;
  StepBuilder b(g, Rule::kL2a);
  b.add_edge(p, *pp);
  b.add_edge(q, *qq);
  b.add_vertex(u);
  if (!b.cover_around(v)) return std::nullopt;
  return finish(b, g);
}

std::optional<ReductionStep> step_l2b(const PlaneGraph& g, VertexId u,
                                      VertexId v) {
  const auto pq = apexes(g, u, v);
  if (!pq) return std::nullopt;
  if (g.adjacent(pq->first, pq->second)) {
    return single_edge(g, Rule::kL2b, pq->first, pq->second, u);
  }
  for (auto [p, q] : {*pq, std::make_pair(pq->second, pq->first)}) {
    const EdgeId vq = *g.find_edge(v, q);
    if (!weak(g, vq)) continue;
    // Apex of the triangle on (v, q) away from u.
    std::optional<VertexId> qq;
    for (Dart d : {g.dart(v, q), g.dart(q, v)}) {
      const auto a = apex(g, d);
      if (a && *a != u) qq = a;
    }
    if (!qq) continue;
    const auto pp = lowest_neighbor_except(g, p, {u, v, q, *qq});
    if (!pp) continue;
    StepBuilder b(g, Rule::kL2b);
    b.add_edge(p, *pp);
    b.add_edge(q, *qq);
    b.add_vertex(u);
    if (!b.cover_around(v)) continue;
    if (auto s = finish(b, g)) return s;
  }
  return std::nullopt;
}

std::optional<ReductionStep> step_l3(const PlaneGraph& g, VertexId u,
                                     VertexId v) {
  const auto pq = apexes(g, u, v);
  if (!pq) return std::nullopt;
  for (auto [p, q] : {*pq, std::make_pair(pq->second, pq->first)}) {
    const auto [a, b] = around(g, u, q);
    const VertexId qq = a == v ? b : a;
    if (qq == v || qq == p) continue;
    if (const auto pp = lowest_neighbor_except(g, p, {u, v, q, qq})) {
      StepBuilder sb(g, Rule::kL3);
      sb.add_edge(p, *pp);
      sb.add_edge(q, qq);
      sb.add_vertex(u);
      if (!sb.cover_around(v)) continue;
      if (auto s = finish(sb, g)) return s;
      continue;
    }
    const auto vv = lowest_neighbor_except(g, v, {u, p, q, qq});
    if (!vv) {
      throw Error(ErrorCode::kInvariantViolated,
                  "L3 neighborhood closes into K5 at vertex " +
                      std::to_string(v));
    }
    StepBuilder sb(g, Rule::kL3);
    sb.add_edge(q, qq);
    sb.add_edge(v, *vv);
    sb.add_vertices(u, p);
    if (auto s = finish(sb, g)) return s;
  }
  return std::nullopt;
}

std::optional<ReductionStep> step_l5(const PlaneGraph& g, VertexId u,
                                     VertexId v) {
  std::optional<VertexId> p = apex(g, g.dart(u, v));
  if (!p) p = apex(g, g.dart(v, u));
  if (!p) return std::nullopt;
  const auto [a, b] = around(g, u, v);
  const VertexId uu = a == *p ? b : a;
  if (uu == *p) return std::nullopt;
  if (g.adjacent(*p, uu)) return single_edge(g, Rule::kL5, *p, uu, u);
  const auto uuu = lowest_neighbor_except(g, uu, {u, v});
  if (!uuu) return std::nullopt;
  const auto pp = lowest_neighbor_except(g, *p, {u, v, *uuu});
  if (!pp) return std::nullopt;
  StepBuilder sb(g, Rule::kL5);
  sb.add_edge(uu, *uuu);
  sb.add_edge(*p, *pp);
  sb.add_vertex(u);
  if (!sb.cover_around(v)) return std::nullopt;
  return finish(sb, g);
}

// The 4-face is read as the cycle u, v, q, p.
std::optional<ReductionStep> step_l6(const PlaneGraph& g, VertexId u,
                                     VertexId v, FaceId f) {
  if (!g.is_quad(f)) return std::nullopt;
  auto cyc = g.boundary_cycle(f);
  std::rotate(cyc.begin(), std::find(cyc.begin(), cyc.end(), u), cyc.end());
  if (cyc[1] != v) std::reverse(cyc.begin() + 1, cyc.end());
  if (cyc[1] != v) return std::nullopt;
  const VertexId q = cyc[2];
  const VertexId p = cyc[3];
  if (g.adjacent(u, q)) return single_edge(g, Rule::kL6, p, q, u);
  const auto uu = lowest_neighbor_except(g, u, {v, p});
  if (!uu) return std::nullopt;
  for (VertexId x : {p, q, v}) {
    if (g.adjacent(*uu, x)) {
      if (auto s = single_edge(g, Rule::kL6, *uu, x, u)) return s;
    }
  }
  const auto uuu = lowest_neighbor_except(g, *uu, {u});
  if (!uuu) return std::nullopt;
  StepBuilder sb(g, Rule::kL6);
  sb.add_edge(p, q);
  sb.add_edge(*uu, *uuu);
  sb.add_vertex(u);
  if (!sb.cover_around(v)) return std::nullopt;
  return finish(sb, g);
}

std::optional<ReductionStep> step_l7(const PlaneGraph& g, FaceId f) {
  if (!g.is_simple_face(f, 5)) return std::nullopt;
  auto cyc = g.boundary_cycle(f);
  const auto top = std::min_element(cyc.begin(), cyc.end(), [&](VertexId a, VertexId b) {
    return std::make_pair(-g.degree(a), a) < std::make_pair(-g.degree(b), b);
  });
  std::rotate(cyc.begin(), top, cyc.end());
  const VertexId u = cyc[0];
  std::vector<std::pair<VertexId, VertexId>> choices{{cyc[1], cyc[3]},
                                                     {cyc[4], cyc[2]}};
  if (cyc[4] < cyc[1]) std::swap(choices[0], choices[1]);
  for (auto [v, p] : choices) {
    for (VertexId x : {u, v}) {
      if (!g.adjacent(p, x)) continue;
      StepBuilder sb(g, Rule::kL7);
      sb.add_edge(p, x);
      sb.add_vertices(u, v);
      if (auto s = finish(sb, g)) return s;
    }
    std::optional<VertexId> pp;
    for (VertexId y : g.neighbors(p)) {
      if (std::find(cyc.begin(), cyc.end(), y) != cyc.end()) continue;
      if (!pp || y < *pp) pp = y;
    }
    if (!pp) continue;
    StepBuilder sb(g, Rule::kL7);
    sb.add_edge(u, v);
    sb.add_edge(p, *pp);
    for (VertexId x : cyc) sb.add_vertex(x);
    if (auto s = finish(sb, g)) return s;
  }
  return std::nullopt;
}

std::optional<ReductionStep> try_step(const PlaneGraph& g,
                                      const Configuration& c) {
  switch (c.tag) {
    case Rule::kL1:
    case Rule::kL4: return opposite_edge(g, c.tag, c.u, c.v);
    case Rule::kL2a: return step_l2a(g, c.u, c.v);
    case Rule::kL2b: return step_l2b(g, c.u, c.v);
    case Rule::kL3: return step_l3(g, c.u, c.v);
    case Rule::kL5: return step_l5(g, c.u, c.v);
    case Rule::kL6: return step_l6(g, c.u, c.v, c.face);
    case Rule::kL7: return step_l7(g, c.face);
    default: return std::nullopt;
  }
}

// A 3-vertex on a triangle, whatever its neighbors' degrees.
std::optional<ReductionStep> deg3_triangle_step(const PlaneGraph& g) {
  for (VertexId u : g.vertices()) {
    if (g.degree(u) != 3) continue;
    for (Dart d : g.rotation(u)) {
      const auto p = apex(g, d);
      if (!p) continue;
      if (auto s = single_edge(g, Rule::kDeg3Triangle, g.head(d), *p, u)) {
        return s;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

void for_each_borodin_configuration(
    const PlaneGraph& g, const std::function<bool(const Configuration&)>& visit) {
  if (detail::min_degree(g) < 3) {
    throw Error(ErrorCode::kPreconditionFailed, "minimum degree below three");
  }
  const auto vs = g.vertices();
  for (Rule tag : {Rule::kL1, Rule::kL2a, Rule::kL2b, Rule::kL3, Rule::kL4,
                   Rule::kL5, Rule::kL6}) {
    for (VertexId u : vs) {
      auto nb = g.neighbors(u);
      std::sort(nb.begin(), nb.end());
      for (VertexId v : nb) {
        const EdgeId e = *g.find_edge(u, v);
        Configuration cfg{tag, u, v, e, kNone};
        if (tag == Rule::kL6) {
          const auto f = l6_face(g, u, v);
          if (!f) continue;
          cfg.face = *f;
        } else if (!edge_rule_holds(g, tag, u, v, e)) {
          continue;
        }
        if (visit(cfg)) return;
      }
    }
  }
  std::vector<std::pair<std::vector<VertexId>, FaceId>> fives;
  for (FaceId f : g.faces()) {
    if (l7_holds(g, f)) fives.emplace_back(g.face_vertices(f), f);
  }
  std::sort(fives.begin(), fives.end());
  for (const auto& [_, f] : fives) {
    if (visit({Rule::kL7, kNone, kNone, kNone, f})) return;
  }
}

Configuration find_borodin_configuration(const PlaneGraph& g) {
  std::optional<Configuration> found;
  for_each_borodin_configuration(g, [&](const Configuration& c) {
    found = c;
    return true;
  });
  if (!found) throw Error(ErrorCode::kNoConfiguration, "no configuration L1-L7");
  return *found;
}

ReductionStep step_for_configuration(const PlaneGraph& g,
                                     const Configuration& cfg) {
  if (!holds(g, cfg)) {
    throw Error(ErrorCode::kInvalidWitness,
                std::string(rule_name(cfg.tag)) + " does not hold");
  }
  if (auto s = try_step(g, cfg)) return *s;
  throw Error(ErrorCode::kInvariantViolated,
              std::string("no guard edges for ") +
                  std::string(rule_name(cfg.tag)));
}

namespace {

std::optional<ReductionStep> three_eighths_step(const PlaneGraph& g) {
  if (auto s = find_low_degree_step(g, false)) return s;
  std::optional<ReductionStep> found;
  for_each_borodin_configuration(g, [&](const Configuration& c) {
    found = try_step(g, c);
    return found.has_value();
  });
  if (found) return found;
  return deg3_triangle_step(g);
}

}  // namespace

GuardSet guard_three_eighths(const PlaneGraph& g) {
  return run_iterative(g, three_eighths_step, kThreeEighths, "3n8");
}

}  // namespace edgeguard
