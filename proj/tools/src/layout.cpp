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

#include "edgeguard/cli/layout.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "edgeguard/errors.hpp"

namespace edgeguard::cli {
namespace {

struct Box {
  double x0 = 0, y0 = 0, x1 = 0, y1 = 0;
};

Box bounds(const std::vector<Point>& pos, const std::vector<VertexId>& vs) {
  Box b{pos[vs[0]].x, pos[vs[0]].y, pos[vs[0]].x, pos[vs[0]].y};
  for (VertexId v : vs) {
    b.x0 = std::min(b.x0, pos[v].x);
    b.y0 = std::min(b.y0, pos[v].y);
    b.x1 = std::max(b.x1, pos[v].x);
    b.y1 = std::max(b.y1, pos[v].y);
  }
  return b;
}

// Distinct vertices of the walk bounding this component from outside.
std::vector<VertexId> outer_ring(const PlaneGraph& g,
                                 const std::vector<VertexId>& comp) {
  for (VertexId v : comp) {
    for (Dart d : g.rotation(v)) {
      if (!g.on_outer_walk(d)) continue;
      std::vector<VertexId> ring;
      for (Dart x : g.walk_of(d)) {
        const VertexId t = g.tail(x);
        if (std::find(ring.begin(), ring.end(), t) == ring.end()) ring.push_back(t);
      }
      return ring;
    }
  }
  return {};
}

bool spread_out(const std::vector<Point>& pos, const std::vector<VertexId>& comp) {
  for (std::size_t i = 0; i < comp.size(); ++i) {
    for (std::size_t j = i + 1; j < comp.size(); ++j) {
      const double dx = pos[comp[i]].x - pos[comp[j]].x;
      const double dy = pos[comp[i]].y - pos[comp[j]].y;
      if (dx * dx + dy * dy < 1e-8) return false;
    }
  }
  return true;
}

bool tutte(const PlaneGraph& g, const std::vector<VertexId>& comp,
           std::vector<Point>& pos) {
  const auto ring = outer_ring(g, comp);
  if (ring.size() < 3) return false;
  std::vector<char> pinned(g.vertex_slots(), 0);
  const int k = static_cast<int>(ring.size());
  for (int i = 0; i < k; ++i) {
    const double a = 2 * std::numbers::pi * i / k;
    pos[ring[i]] = {std::cos(a), -std::sin(a)};
    pinned[ring[i]] = 1;
  }
  for (VertexId v : comp) {
    if (!pinned[v]) pos[v] = {0, 0};
  }
  for (int it = 0; it < 20000; ++it) {
    double moved = 0;
    for (VertexId v : comp) {
      if (pinned[v]) continue;
      Point p{0, 0};
      for (Dart d : g.rotation(v)) {
        p.x += pos[g.head(d)].x;
        p.y += pos[g.head(d)].y;
      }
      p.x /= g.degree(v);
      p.y /= g.degree(v);
      moved = std::max(moved, std::abs(p.x - pos[v].x) + std::abs(p.y - pos[v].y));
      pos[v] = p;
    }
    if (moved < 1e-10) break;
  }
  return spread_out(pos, comp);
}

// Fruchterman-Reingold from a circle, fixed schedule.
void spring(const PlaneGraph& g, const std::vector<VertexId>& comp,
            std::vector<Point>& pos) {
  const int n = static_cast<int>(comp.size());
  for (int i = 0; i < n; ++i) {
    const double a = 2 * std::numbers::pi * i / n;
    pos[comp[i]] = {std::cos(a), -std::sin(a)};
  }
  if (n < 2) return;
  const double k = 2.0 / std::sqrt(n);
  double temp = 0.2;
  std::vector<Point> disp(g.vertex_slots());
  for (int it = 0; it < 500; ++it) {
    for (VertexId v : comp) disp[v] = {0, 0};
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const VertexId a = comp[i];
        const VertexId b = comp[j];
        const double dx = pos[a].x - pos[b].x;
        const double dy = pos[a].y - pos[b].y;
        const double dist = std::max(std::hypot(dx, dy), 1e-6);
        const double f = k * k / dist / dist;
        disp[a].x += dx * f;
        disp[a].y += dy * f;
        disp[b].x -= dx * f;
        disp[b].y -= dy * f;
      }
    }
    for (VertexId a : comp) {
      for (Dart d : g.rotation(a)) {
        const VertexId b = g.head(d);
        const double dx = pos[a].x - pos[b].x;
        const double dy = pos[a].y - pos[b].y;
        const double f = std::hypot(dx, dy) / k;
        disp[a].x -= dx * f;
        disp[a].y -= dy * f;
      }
    }
    for (VertexId v : comp) {
      const double len = std::max(std::hypot(disp[v].x, disp[v].y), 1e-12);
      const double step = std::min(len, temp);
      pos[v].x += disp[v].x / len * step;
      pos[v].y += disp[v].y / len * step;
    }
    temp *= 0.99;
  }
}

void require_finite(const std::vector<Point>& pos, const std::vector<VertexId>& vs) {
  for (VertexId v : vs) {
    if (!std::isfinite(pos[v].x) || !std::isfinite(pos[v].y)) {
      throw Error(ErrorCode::kLayoutFailed,
                  "vertex " + std::to_string(v) + " has no finite position");
    }
  }
}

}  // namespace

Layout compute_layout(const PlaneGraph& g) {
  const auto vs = g.vertices();
  if (vs.empty()) throw Error(ErrorCode::kLayoutFailed, "graph has no vertices");
  Layout out;
  out.pos.assign(g.vertex_slots(), {0, 0});
  if (g.coords()) {
    out.pos = *g.coords();
    out.method = "coords";
    require_finite(out.pos, vs);
    return out;
  }
  std::vector<std::string> methods;
  double x = 0;
  for (const auto& comp : connected_components(g)) {
    const char* m = "tutte";
    if (!tutte(g, comp, out.pos)) {
      spring(g, comp, out.pos);
      m = "force";
    }
    if (std::find(methods.begin(), methods.end(), m) == methods.end()) {
      methods.emplace_back(m);
    }
    require_finite(out.pos, comp);
    const Box b = bounds(out.pos, comp);
    const double span = std::max({b.x1 - b.x0, b.y1 - b.y0, 1e-9});
    for (VertexId v : comp) {
      out.pos[v].x = x + (out.pos[v].x - b.x0) / span;
      out.pos[v].y = (out.pos[v].y - b.y0) / span;
    }
    x += (b.x1 - b.x0) / span + 0.4;
  }
  for (std::size_t i = 0; i < methods.size(); ++i) {
    out.method += (i ? "+" : "") + methods[i];
  }
  return out;
}

}  // namespace edgeguard::cli
