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
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edgeguard/chromatic.hpp"
#include "edgeguard/errors.hpp"

namespace edgeguard {
namespace {

// Most-saturated-first backtracking with conflict-directed backjumping: a
// dead end jumps straight to the latest assignment that constrained it.
class Dsatur {
 public:
  Dsatur(const PlaneGraph& g, std::int64_t budget)
      : budget_(budget),
        adj_(g.vertex_slots()),
        color_(g.vertex_slots(), kNone),
        level_(g.vertex_slots(), kNone),
        seen_(g.vertex_slots(), {0, 0, 0, 0}),
        free_degree_(g.vertex_slots(), 0),
        live_(g.vertices()) {
    for (VertexId v : live_) {
      adj_[v] = g.neighbors(v);
      free_degree_[v] = static_cast<int>(adj_[v].size());
    }
    conflicts_.resize(live_.size() + 1);
  }

  bool run() { return solve(0) == kSolved; }

  std::vector<int> colors() const { return color_; }

 private:
  static constexpr int kSolved = -1;
  static constexpr int kExhausted = -2;

  // kSolved, kExhausted, or the level to resume at.
  int solve(int level) {
    const VertexId v = pick();
    if (v == kNone) return kSolved;
    std::vector<int>& conf = conflicts_[level];
    conf.clear();
    for (int c = 0; c < 4; ++c) {
      if (seen_[v][c]) {
        add_conflict(conf, earliest_with(v, c));
        continue;
      }
      if (++nodes_ > budget_) {
        throw Error(ErrorCode::kTimeout, "four-coloring exceeded " +
                                             std::to_string(budget_) + " nodes");
      }
      paint(v, c, level);
      const int r = solve(level + 1);
      if (r == kSolved) return kSolved;
      unpaint(v, c);
      if (r != level) return r;
    }
    if (conf.empty()) return kExhausted;
    const int back = conf.back();
    for (int l : conf) {
      if (l != back) add_conflict(conflicts_[back], l);
    }
    return back;
  }

  static void add_conflict(std::vector<int>& conf, int l) {
    const auto it = std::lower_bound(conf.begin(), conf.end(), l);
    if (it == conf.end() || *it != l) conf.insert(it, l);
  }

  int earliest_with(VertexId v, int c) const {
    int best = kNone;
    for (VertexId x : adj_[v]) {
      if (color_[x] == c && (best == kNone || level_[x] < best)) best = level_[x];
    }
    return best;
  }

  int saturation(VertexId v) const {
    int s = 0;
    for (int c = 0; c < 4; ++c) s += seen_[v][c] > 0;
    return s;
  }

  // Most saturated, then most uncolored neighbours, then lowest id.
  VertexId pick() const {
    VertexId best = kNone;
    int best_sat = -1;
    int best_deg = -1;
    for (VertexId v : live_) {
      if (color_[v] != kNone) continue;
      const int s = saturation(v);
      const int d = free_degree_[v];
      if (s > best_sat || (s == best_sat && d > best_deg)) {
        best = v;
        best_sat = s;
        best_deg = d;
      }
    }
    return best;
  }

  void paint(VertexId v, int c, int level) {
    color_[v] = c;
    level_[v] = level;
    for (VertexId x : adj_[v]) {
      ++seen_[x][c];
      --free_degree_[x];
    }
  }

  void unpaint(VertexId v, int c) {
    color_[v] = kNone;
    level_[v] = kNone;
    for (VertexId x : adj_[v]) {
      --seen_[x][c];
      ++free_degree_[x];
    }
  }

  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<std::vector<VertexId>> adj_;
  std::vector<int> color_;
  std::vector<int> level_;
  std::vector<std::array<int, 4>> seen_;
  std::vector<int> free_degree_;
  std::vector<VertexId> live_;
  std::vector<std::vector<int>> conflicts_;
};

struct FaceMasks {
  std::uint32_t vertices = 0;
  std::vector<std::uint32_t> edges;
};

}  // namespace

VertexColoring four_color(const PlaneGraph& gp, const ColoringOptions& opts) {
  Dsatur solver(gp, opts.node_budget);
  if (!solver.run()) {
    throw Error(ErrorCode::kInvariantViolated, "graph is not four-colorable");
  }
  VertexColoring out{solver.colors()};
  for (EdgeId e : gp.edges()) {
    const auto [a, b] = gp.endpoints(e);
    if (out.colors[a] == out.colors[b]) {
      throw Error(ErrorCode::kInvariantViolated,
                  "edge " + std::to_string(e) + " is monochromatic");
    }
  }
  return out;
}

bool is_guard_coloring(const PlaneGraph& g, const TwoColoring& tc) {
  if (static_cast<int>(tc.sides.size()) != g.vertex_slots()) return false;
  for (VertexId v : g.vertices()) {
    if (g.degree(v) > 0 && tc.sides[v] != 0 && tc.sides[v] != 1) return false;
  }
  for (FaceId f : g.faces()) {
    bool side[2] = {false, false};
    bool mono_edge = false;
    for (const auto& walk : g.face_walks(f)) {
      for (Dart d : walk) {
        const int a = tc.sides[g.tail(d)];
        side[a] = true;
        if (a == tc.sides[g.head(d)]) mono_edge = true;
      }
    }
    if (!side[0] || !side[1] || !mono_edge) return false;
  }
  return true;
}

std::optional<TwoColoring> find_guard_coloring(const PlaneGraph& g,
                                               const GuardColoringOptions& opts) {
  std::vector<VertexId> vs;
  std::vector<int> bit(g.vertex_slots(), kNone);
  for (VertexId v : g.vertices()) {
    if (g.degree(v) == 0) continue;
    bit[v] = static_cast<int>(vs.size());
    vs.push_back(v);
  }
  const int k = static_cast<int>(vs.size());
  if (k == 0) return std::nullopt;
  if (k > opts.vertex_budget || k > 31) {
    throw Error(ErrorCode::kBudgetExceeded,
                std::to_string(k) + " vertices exceed the budget of " +
                    std::to_string(opts.vertex_budget));
  }
  std::vector<FaceMasks> faces;
  for (FaceId f : g.faces()) {
    FaceMasks fm;
    for (const auto& walk : g.face_walks(f)) {
      for (Dart d : walk) {
        const std::uint32_t a = std::uint32_t{1} << bit[g.tail(d)];
        const std::uint32_t b = std::uint32_t{1} << bit[g.head(d)];
        fm.vertices |= a;
        fm.edges.push_back(a | b);
      }
    }
    if (fm.edges.empty()) return std::nullopt;
    faces.push_back(std::move(fm));
  }
  // Bit i set puts vs[i] on side 1; vs[0] stays on side 0.
  const std::uint32_t count = std::uint32_t{1} << (k - 1);
  for (std::uint32_t half = 0; half < count; ++half) {
    const std::uint32_t mask = half << 1;
    bool ok = true;
    for (const FaceMasks& fm : faces) {
      const std::uint32_t on = fm.vertices & mask;
      if (on == 0 || on == fm.vertices) {
        ok = false;
        break;
      }
      bool mono = false;
      for (std::uint32_t e : fm.edges) {
        const std::uint32_t x = e & mask;
        if (x == 0 || x == e) {
          mono = true;
          break;
        }
      }
      if (!mono) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    TwoColoring tc;
    tc.sides.assign(g.vertex_slots(), kNone);
    for (VertexId v : g.vertices()) tc.sides[v] = 0;
    for (int i = 0; i < k; ++i) tc.sides[vs[i]] = (mask >> i) & 1;
    return tc;
  }
  return std::nullopt;
}

}  // namespace edgeguard
