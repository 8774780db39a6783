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

#include "edgeguard/reductions.hpp"

#include <algorithm>
#include <string>

#include "edgeguard/analysis.hpp"
#include "edgeguard/errors.hpp"
#include "step_builder.hpp"

namespace edgeguard {

using detail::apex;
using detail::lowest_neighbor_except;
using detail::StepBuilder;

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::kDegree0or1: return "Degree0or1";
    case Rule::kDegree2: return "Degree2";
    case Rule::kDeg3AdjacentNeighbors: return "Deg3AdjacentNeighbors";
    case Rule::kDeg3Generic: return "Deg3Generic";
    case Rule::kLebesgueTriangle: return "LebesgueTriangle";
    case Rule::kDeg3Triangle: return "Deg3Triangle";
    case Rule::kL1: return "L1";
    case Rule::kL2a: return "L2a";
    case Rule::kL2b: return "L2b";
    case Rule::kL3: return "L3";
    case Rule::kL4: return "L4";
    case Rule::kL5: return "L5";
    case Rule::kL6: return "L6";
    case Rule::kL7: return "L7";
  }
  return "?";
}

std::string_view strength_name(EdgeStrength s) {
  switch (s) {
    case EdgeStrength::kWeak: return "weak";
    case EdgeStrength::kSemiweak: return "semiweak";
    case EdgeStrength::kStrong: return "strong";
  }
  return "?";
}

EdgeStrength classify_edge(const PlaneGraph& g, EdgeId e) {
  if (!g.has_edge(e)) {
    throw Error(ErrorCode::kUnknownEdge, "edge " + std::to_string(e));
  }
  const auto [f1, f2] = g.flanking_faces(e);
  const int t = g.is_triangle(f1) + (f1 != f2 && g.is_triangle(f2));
  if (t == 2) return EdgeStrength::kWeak;
  return t == 1 ? EdgeStrength::kSemiweak : EdgeStrength::kStrong;
}

int detail::min_degree(const PlaneGraph& g) {
  int d = -1;
  for (VertexId v : g.vertices()) {
    if (d < 0 || g.degree(v) < d) d = g.degree(v);
  }
  return d;
}

bool step_is_valid(const PlaneGraph& g, const ReductionStep& step,
                   const Rational& c) {
  if (step.removed_vertices.empty()) return false;
  auto vs = step.removed_vertices;
  std::sort(vs.begin(), vs.end());
  if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) return false;
  for (VertexId v : vs) {
    if (!g.has_vertex(v)) return false;
  }
  std::vector<char> cov(g.vertex_slots(), 0);
  for (EdgeId e : step.guard_edges) {
    if (!g.has_edge(e)) return false;
    const auto [a, b] = g.endpoints(e);
    cov[a] = cov[b] = 1;
  }
  const auto k = static_cast<std::int64_t>(step.guard_edges.size());
  if (Rational(k) > c * Rational(static_cast<std::int64_t>(vs.size()))) {
    return false;
  }
  if (step.rule == Rule::kDegree0or1 && step.guard_edges.empty()) return true;
  for (VertexId v : vs) {
    for (FaceId f : g.faces_at(v)) {
      const auto fv = g.face_vertices(f);
      if (std::none_of(fv.begin(), fv.end(), [&](VertexId x) { return cov[x]; })) {
        return false;
      }
    }
  }
  return true;
}

GuardSet run_iterative(const PlaneGraph& g, const StepProvider& provider,
                       const Rational& c, std::string_view algorithm,
                       std::vector<ReductionStep>* trace) {
  if (g.vertex_count() < 3 || g.edge_count() == 0) {
    throw Error(ErrorCode::kPreconditionFailed,
                "needs at least three vertices and one edge");
  }
  GuardSet out;
  out.algorithm = std::string(algorithm);
  out.bound = c * Rational(g.vertex_count());
  if (g.face_count() == 1) {
    out.edges = {g.edges().front()};
    return out;
  }
  PlaneGraph h = g;
  while (!is_forest(h)) {
    auto step = provider(h);
    if (!step) {
      throw Error(ErrorCode::kStepNotFound,
                  "no reduction applies with " +
                      std::to_string(h.vertex_count()) + " vertices left");
    }
    if (!step_is_valid(h, *step, c)) {
      throw Error(ErrorCode::kInvariantViolated,
                  std::string("invalid ") + std::string(rule_name(step->rule)) +
                      " step");
    }
    out.edges.insert(out.edges.end(), step->guard_edges.begin(),
                     step->guard_edges.end());
    h.delete_vertices(step->removed_vertices);
    if (trace) trace->push_back(std::move(*step));
  }
  out.normalize();
  const GuardReport report = verify_guard_set(g, out);
  if (!report.guarded) {
    throw Error(ErrorCode::kVerificationFailed,
                std::to_string(report.unguarded.size()) +
                    " faces left unguarded");
  }
  return out;
}

namespace {

bool removal_creates_quad(const PlaneGraph& g, VertexId v) {
  const FaceId f = g.degree(v) == 0 ? g.isolated_face(v)
                                    : g.face_of(g.rotation(v).front());
  PlaneGraph h = g;
  const VertexId victims[] = {v};
  h.delete_vertices(victims);
  return h.has_face(f) && h.is_quad(f);
}

std::optional<ReductionStep> guard_through(const PlaneGraph& g, VertexId v,
                                           VertexId u, Rule rule) {
  const auto w = lowest_neighbor_except(g, u, {v});
  if (!w) return std::nullopt;
  StepBuilder b(g, rule);
  b.add_edge(u, *w);
  b.add_vertex(v);
  return b.take();
}

}  // namespace

std::optional<ReductionStep> find_low_degree_step(const PlaneGraph& g,
                                                  bool protect_quads) {
  const auto vs = g.vertices();
  for (VertexId v : vs) {
    if (g.degree(v) > 1) continue;
    if (!protect_quads || !removal_creates_quad(g, v)) {
      return ReductionStep{{}, {v}, Rule::kDegree0or1};
    }
    if (g.degree(v) == 1) {
      if (auto s = guard_through(g, v, g.head(g.rotation(v).front()),
                                 Rule::kDegree0or1)) {
        return s;
      }
      continue;
    }
    for (VertexId u : g.face_vertices(g.isolated_face(v))) {
      if (g.degree(u) == 0) continue;
      if (auto s = guard_through(g, v, u, Rule::kDegree0or1)) return s;
    }
  }
  for (VertexId v : vs) {
    if (g.degree(v) != 2) continue;
    const auto nb = g.neighbors(v);
    if (auto s = guard_through(g, v, *std::min_element(nb.begin(), nb.end()),
                               Rule::kDegree2)) {
      return s;
    }
  }
  return std::nullopt;
}

bool is_two_degenerate(const PlaneGraph& g) {
  std::vector<int> deg(g.vertex_slots(), 0);
  std::vector<VertexId> stack;
  int left = 0;
  for (VertexId v : g.vertices()) {
    deg[v] = g.degree(v);
    ++left;
    if (deg[v] <= 2) stack.push_back(v);
  }
  std::vector<char> gone(g.vertex_slots(), 0);
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    if (gone[v]) continue;
    gone[v] = 1;
    --left;
    for (VertexId x : g.neighbors(v)) {
      if (!gone[x] && --deg[x] == 2) stack.push_back(x);
    }
  }
  return left == 0;
}

GuardSet guard_two_degenerate(const PlaneGraph& g) {
  if (!is_two_degenerate(g)) {
    throw Error(ErrorCode::kNotTwoDegenerate,
                "some subgraph has minimum degree three");
  }
  return run_iterative(
      g, [](const PlaneGraph& h) { return find_low_degree_step(h, false); },
      Rational(1, 3), "n3-degenerate");
}

Configuration find_lebesgue_configuration(const PlaneGraph& g) {
  if (detail::min_degree(g) < 3) {
    throw Error(ErrorCode::kPreconditionFailed, "minimum degree below three");
  }
  const auto vs = g.vertices();
  for (VertexId u : vs) {
    if (g.degree(u) != 3) continue;
    for (FaceId f : g.faces_at(u)) {
      if (g.side_count(f) <= 5) {
        return {Rule::kLebesgueTriangle, u, kNone, kNone, f};
      }
    }
  }
  for (int want : {4, 5}) {
    for (VertexId u : vs) {
      if (g.degree(u) != want) continue;
      if (want == 5 && detail::triangle_corners(g, u) < 4) continue;
      for (FaceId f : g.faces_at(u)) {
        if (g.is_triangle(f)) return {Rule::kLebesgueTriangle, u, kNone, kNone, f};
      }
    }
  }
  throw Error(ErrorCode::kNoConfiguration, "no Lebesgue configuration");
}

namespace {

// Triangle edge (v1, v2) opposite u plus one more edge for the faces around u
// that it misses.
std::optional<ReductionStep> lebesgue_step(const PlaneGraph& g, VertexId u,
                                           FaceId tri) {
  if (!g.is_triangle(tri)) return std::nullopt;
  for (Dart d : g.rotation(u)) {
    if (g.face_of(d) != tri) continue;
    StepBuilder b(g, Rule::kLebesgueTriangle);
    b.add_edge(g.head(d), g.head(g.next(d)));
    if (!b.cover_around(u)) return std::nullopt;
    auto s = b.take();
    if (step_is_valid(g, s, Rational(2, 5))) return s;
  }
  return std::nullopt;
}

std::optional<ReductionStep> two_fifths_step(const PlaneGraph& g) {
  if (auto s = find_low_degree_step(g, false)) return s;
  const auto vs = g.vertices();
  for (VertexId u : vs) {
    if (g.degree(u) != 3) continue;
    auto nb = g.neighbors(u);
    std::sort(nb.begin(), nb.end());
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (!g.adjacent(nb[i], nb[j])) continue;
        StepBuilder b(g, Rule::kDeg3AdjacentNeighbors);
        b.add_edge(nb[i], nb[j]);
        b.add_vertex(u);
        return b.take();
      }
    }
  }
  for (VertexId u : vs) {
    if (g.degree(u) != 3) continue;
    auto nb = g.neighbors(u);
    std::sort(nb.begin(), nb.end());
    const VertexId v1 = nb[0];
    const VertexId v2 = nb[1];
    const auto v1p = lowest_neighbor_except(g, v1, {u});
    const auto v2p = v1p ? lowest_neighbor_except(g, v2, {u, *v1p}) : std::nullopt;
    if (!v2p) {
      throw Error(ErrorCode::kInvariantViolated,
                  "neighbor of a 3-vertex has degree below three");
    }
    StepBuilder b(g, Rule::kDeg3Generic);
    b.add_edge(v1, *v1p);
    b.add_edge(v2, *v2p);
    b.add_vertex(u);
    return b.take();
  }
  const Configuration cfg = find_lebesgue_configuration(g);
  if (auto s = lebesgue_step(g, cfg.u, cfg.face)) return s;
  for (VertexId u : vs) {
    if (g.degree(u) > 5) continue;
    for (FaceId f : g.faces_at(u)) {
      if (auto s = lebesgue_step(g, u, f)) return s;
    }
  }
  return std::nullopt;
}

}  // namespace

GuardSet guard_two_fifths(const PlaneGraph& g) {
  return run_iterative(g, two_fifths_step, Rational(2, 5), "2n5");
}

}  // namespace edgeguard
