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

#include "edgeguard/oracle.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "edgeguard/errors.hpp"

namespace edgeguard {
namespace {

class Bits {
 public:
  Bits() = default;
  explicit Bits(int n) : w_((n + 63) / 64, 0) {}

  void set(int i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  bool none() const {
    return std::all_of(w_.begin(), w_.end(), [](std::uint64_t x) { return x == 0; });
  }
  int count() const {
    int c = 0;
    for (std::uint64_t x : w_) c += std::popcount(x);
    return c;
  }
  int count_and(const Bits& o) const {
    int c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i] & o.w_[i]) return true;
    }
    return false;
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
  }
  Bits minus(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
    return r;
  }
  Bits& operator|=(const Bits& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }

  template <typename F>
  void for_each(F&& fn) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      for (std::uint64_t x = w_[i]; x; x &= x - 1) {
        fn(static_cast<int>(i * 64 + std::countr_zero(x)));
      }
    }
  }

 private:
  std::vector<std::uint64_t> w_;
};

// Faces and edges renumbered densely; edges keep ascending id order.
class CoverSolver {
 public:
  CoverSolver(const PlaneGraph& g, const OracleOptions& opts)
      : opts_(opts), edge_ids_(g.edges()) {
    if (static_cast<int>(edge_ids_.size()) > opts.edge_budget) {
      throw Error(ErrorCode::kBudgetExceeded,
                  std::to_string(edge_ids_.size()) + " edges exceed the budget of " +
                      std::to_string(opts.edge_budget));
    }
    const auto faces = g.faces();
    nf_ = static_cast<int>(faces.size());
    ne_ = static_cast<int>(edge_ids_.size());
    std::vector<Bits> at_vertex(g.vertex_slots(), Bits(nf_));
    for (int i = 0; i < nf_; ++i) {
      for (VertexId v : g.face_vertices(faces[i])) at_vertex[v].set(i);
    }
    cover_.assign(ne_, Bits(nf_));
    cands_.assign(nf_, Bits(ne_));
    for (int j = 0; j < ne_; ++j) {
      const auto [a, b] = g.endpoints(edge_ids_[j]);
      cover_[j] = at_vertex[a];
      cover_[j] |= at_vertex[b];
      cover_[j].for_each([&](int f) { cands_[f].set(j); });
    }
    for (int f = 0; f < nf_; ++f) {
      if (cands_[f].none()) {
        throw Error(ErrorCode::kInfeasible,
                    "face " + std::to_string(faces[f]) + " touches no edge");
      }
    }
  }

  int edges() const { return ne_; }

  Bits all_faces() const {
    Bits b(nf_);
    for (int f = 0; f < nf_; ++f) b.set(f);
    return b;
  }
  Bits all_edges_from(int first) const {
    Bits b(ne_);
    for (int j = first; j < ne_; ++j) b.set(j);
    return b;
  }
  const Bits& cover(int j) const { return cover_[j]; }
  EdgeId edge_id(int j) const { return edge_ids_[j]; }

  int greedy(const Bits& uncovered) const {
    Bits u = uncovered;
    int k = 0;
    while (!u.none()) {
      int best = -1;
      int gain = 0;
      for (int j = 0; j < ne_; ++j) {
        const int c = cover_[j].count_and(u);
        if (c > gain) {
          gain = c;
          best = j;
        }
      }
      u = u.minus(cover_[best]);
      ++k;
    }
    return k;
  }

  int lower_bound(const Bits& u, const Bits& allowed) const {
    int best = 0;
    allowed.for_each([&](int j) { best = std::max(best, cover_[j].count_and(u)); });
    if (best == 0) return u.none() ? 0 : ne_ + 1;
    int lb = (u.count() + best - 1) / best;
    // Faces with pairwise disjoint candidate sets each need their own edge.
    std::vector<std::pair<int, int>> order;
    u.for_each([&](int f) { order.emplace_back(cands_[f].count_and(allowed), f); });
    std::sort(order.begin(), order.end());
    Bits used(ne_);
    int packed = 0;
    for (const auto& [_, f] : order) {
      const Bits mine = cands_[f] & allowed;
      if (mine.intersects(used)) continue;
      used |= mine;
      ++packed;
    }
    return std::max(lb, packed);
  }

  // True if at most k edges from `allowed` cover `u`.
  bool feasible(const Bits& u, int k, Bits allowed) {
    if (u.none()) return true;
    if (k <= 0) return false;
    if (++nodes_ > opts_.node_budget) {
      throw Error(ErrorCode::kBudgetExceeded, "oracle search node budget exhausted");
    }
    if (lower_bound(u, allowed) > k) return false;
    int face = -1;
    int fewest = ne_ + 1;
    u.for_each([&](int f) {
      const int c = cands_[f].count_and(allowed);
      if (c < fewest) {
        fewest = c;
        face = f;
      }
    });
    if (fewest == 0) return false;
    std::vector<int> branch;
    cands_[face].for_each([&](int j) {
      if (allowed.test(j)) branch.push_back(j);
    });
    for (int j : branch) {
      if (feasible(u.minus(cover_[j]), k - 1, allowed)) return true;
      allowed.reset(j);
    }
    return false;
  }

 private:
  OracleOptions opts_;
  std::vector<EdgeId> edge_ids_;
  int nf_ = 0;
  int ne_ = 0;
  std::vector<Bits> cover_;
  std::vector<Bits> cands_;
  std::int64_t nodes_ = 0;
};

CoverSolver make_solver(const PlaneGraph& g, const OracleOptions& opts) {
  if (g.edge_count() == 0) {
    throw Error(ErrorCode::kInfeasible, "graph has no edges");
  }
  return CoverSolver(g, opts);
}

}  // namespace

GuardSet minimum_guard_set(const PlaneGraph& g, std::optional<int> upper_hint,
                           const OracleOptions& opts) {
  CoverSolver s = make_solver(g, opts);
  const Bits all = s.all_faces();
  const Bits every = s.all_edges_from(0);
  int ub = s.greedy(all);
  if (upper_hint && *upper_hint < ub && s.feasible(all, *upper_hint, every)) {
    ub = *upper_hint;
  }
  int k = s.lower_bound(all, every);
  while (k < ub && !s.feasible(all, k, every)) ++k;
  GuardSet out;
  out.algorithm = "oracle";
  Bits u = all;
  int next = 0;
  for (int left = k; left > 0; --left) {
    for (int j = next; j < s.edges(); ++j) {
      const Bits rest = u.minus(s.cover(j));
      if (s.feasible(rest, left - 1, s.all_edges_from(j + 1))) {
        out.edges.push_back(s.edge_id(j));
        u = rest;
        next = j + 1;
        break;
      }
    }
  }
  out.normalize();
  out.bound = Rational(out.size());
  return out;
}

bool is_guardable_with(const PlaneGraph& g, int k, const OracleOptions& opts) {
  CoverSolver s = make_solver(g, opts);
  return s.feasible(s.all_faces(), std::min(k, s.edges()), s.all_edges_from(0));
}

}  // namespace edgeguard
