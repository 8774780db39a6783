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

#include "edgeguard/corpus.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <numbers>
#include <random>
#include <unordered_map>

#include "edgeguard/analysis.hpp"
#include "edgeguard/errors.hpp"

namespace edgeguard {

namespace {

// Portable draws on top of mt19937_64; the standard distributions are not
// bit-reproducible across library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t bits() { return eng_(); }

  int below(int n) {
    const std::uint64_t range = static_cast<std::uint64_t>(n);
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % range;
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return static_cast<int>(x % range);
  }

  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  bool chance(double p) { return unit() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      std::swap(v[i], v[below(i + 1)]);
    }
  }

 private:
  std::mt19937_64 eng_;
};

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double orient(const Point& a, const Point& b, const Point& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

std::uint64_t directed_key(VertexId a, VertexId b) {
  return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kPreconditionFailed, what);
}

PlaneGraph rebuild(const PlaneGraph& g) {
  return PlaneGraph::build(g.serialize());
}

PlaneGraph face_cycles_with_outer(int n,
                                  const std::vector<std::vector<VertexId>>& faces,
                                  std::optional<std::vector<Point>> coords,
                                  const std::vector<VertexId>* outer) {
  std::vector<std::unordered_map<VertexId, VertexId>> succ(n);
  for (const auto& f : faces) {
    const int k = static_cast<int>(f.size());
    for (int i = 0; i < k; ++i) {
      const VertexId a = f[(i + k - 1) % k];
      const VertexId b = f[i];
      const VertexId c = f[(i + 1) % k];
      if (a < 0 || a >= n || b < 0 || b >= n || c < 0 || c >= n) {
        throw Error(ErrorCode::kMalformedRotation, "face names unknown vertex");
      }
      if (!succ[b].emplace(a, c).second) {
        throw Error(ErrorCode::kMalformedRotation,
                    "directed edge used by two faces");
      }
    }
  }
  RotationSystem spec;
  spec.n = n;
  spec.rotations.resize(n);
  for (int b = 0; b < n; ++b) {
    if (succ[b].empty()) continue;
    VertexId start = n;
    for (const auto& [a, c] : succ[b]) start = std::min(start, a);
    if (outer != nullptr) {
      const auto& o = *outer;
      for (std::size_t i = 0; i < o.size(); ++i) {
        if (o[i] == b && succ[b].count(o[(i + 1) % o.size()])) {
          start = o[(i + 1) % o.size()];
        }
      }
    }
    VertexId cur = start;
    do {
      spec.rotations[b].push_back(cur);
      auto it = succ[b].find(cur);
      if (it == succ[b].end() || spec.rotations[b].size() > succ[b].size()) {
        throw Error(ErrorCode::kMalformedRotation,
                    "faces around " + std::to_string(b) + " do not close up");
      }
      cur = it->second;
    } while (cur != start);
    if (spec.rotations[b].size() != succ[b].size()) {
      throw Error(ErrorCode::kMalformedRotation,
                  "faces around " + std::to_string(b) + " form several fans");
    }
  }
  spec.coords = std::move(coords);
  return PlaneGraph::build(spec);
}

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::kDisjointTriangles: return "disjoint_triangles";
    case Family::kFanOuterplanar: return "fan_outerplanar";
    case Family::kRandomTriangulation: return "random_triangulation";
    case Family::kRandomPlane: return "random_plane";
    case Family::kPlatonic: return "platonic";
    case Family::kFarQuads: return "far_quads";
    case Family::kFigureNgc: return "figure_ngc";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f :
       {Family::kDisjointTriangles, Family::kFanOuterplanar,
        Family::kRandomTriangulation, Family::kRandomPlane, Family::kPlatonic,
        Family::kFarQuads, Family::kFigureNgc}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

PlaneGraph from_face_cycles(int n, const std::vector<std::vector<VertexId>>& faces,
                            std::optional<std::vector<Point>> coords) {
  return face_cycles_with_outer(n, faces, std::move(coords), nullptr);
}

PlaneGraph from_straight_line(
    const std::vector<Point>& pts,
    const std::vector<std::pair<VertexId, VertexId>>& edges) {
  const int n = static_cast<int>(pts.size());
  RotationSystem spec;
  spec.n = n;
  spec.rotations.resize(n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw Error(ErrorCode::kMalformedRotation, "edge names unknown vertex");
    }
    spec.rotations[u].push_back(v);
    spec.rotations[v].push_back(u);
  }
  auto angle = [&](VertexId a, VertexId b) {
    return std::atan2(pts[b].y - pts[a].y, pts[b].x - pts[a].x);
  };
  for (int v = 0; v < n; ++v) {
    auto& r = spec.rotations[v];
    std::sort(r.begin(), r.end(), [&](VertexId a, VertexId b) {
      return angle(v, a) > angle(v, b);
    });
  }
  spec.coords = pts;
  PlaneGraph g = PlaneGraph::build(spec);
  // Make walk 0 of each component its geometric outer boundary whenever the
  // component's smallest vertex lies on it.
  bool changed = false;
  for (const auto& comp : connected_components(g)) {
    if (g.degree(comp[0]) == 0) continue;
    VertexId left = comp[0];
    for (VertexId v : comp) {
      if (pts[v].x < pts[left].x ||
          (pts[v].x == pts[left].x && pts[v].y < pts[left].y)) {
        left = v;
      }
    }
    // Clockwise from the largest angle, the corner facing straight left sits
    // just before the first neighbor, i.e. on the walk leaving through it.
    const Dart out = g.rotation(left).front();
    const auto& walk = g.walk_of(out);
    const VertexId v0 = comp[0];
    for (Dart d : walk) {
      if (g.tail(d) != v0) continue;
      auto& r = spec.rotations[v0];
      const VertexId first = g.head(d);
      std::rotate(r.begin(), std::find(r.begin(), r.end(), first), r.end());
      changed = true;
      break;
    }
  }
  return changed ? PlaneGraph::build(spec) : g;
}

PlaneGraph disjoint_triangles(int k) {
  require(k >= 1, "disjoint_triangles needs k >= 1");
  std::vector<Point> pts;
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < k; ++i) {
    const VertexId a = 3 * i;
    pts.push_back({3.0 * i, 0});
    pts.push_back({3.0 * i + 2, 0});
    pts.push_back({3.0 * i + 1, 1.5});
    edges.insert(edges.end(), {{a, a + 1}, {a + 1, a + 2}, {a + 2, a}});
  }
  return from_straight_line(pts, edges);
}

PlaneGraph fan_outerplanar(int n) {
  require(n >= 3, "fan_outerplanar needs n >= 3");
  std::vector<Point> pts{{0, 0}};
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 1; i < n; ++i) {
    const double t = std::numbers::pi * (i - 1) / (n - 2);
    pts.push_back({10 * std::cos(t), 10 * std::sin(t)});
    edges.emplace_back(0, i);
    if (i + 1 < n) edges.emplace_back(i, i + 1);
  }
  return from_straight_line(pts, edges);
}

PlaneGraph random_triangulation(int n, std::uint64_t seed) {
  require(n >= 3, "random_triangulation needs n >= 3");
  Rng rng(seed);
  const double r = 1000;
  std::vector<Point> pts{{0, r},
                         {-r * std::sqrt(3.0) / 2, -r / 2},
                         {r * std::sqrt(3.0) / 2, -r / 2}};
  std::vector<std::array<VertexId, 3>> tris{{0, 1, 2}};
  for (VertexId v = 3; v < n; ++v) {
    const int t = rng.below(static_cast<int>(tris.size()));
    const auto [a, b, c] = tris[t];
    double r1 = rng.unit();
    double r2 = rng.unit();
    if (r1 + r2 > 1) {
      r1 = 1 - r1;
      r2 = 1 - r2;
    }
    const double wb = 0.8 * r1 + 0.2 / 3;
    const double wc = 0.8 * r2 + 0.2 / 3;
    const double wa = 1 - wb - wc;
    pts.push_back({wa * pts[a].x + wb * pts[b].x + wc * pts[c].x,
                   wa * pts[a].y + wb * pts[b].y + wc * pts[c].y});
    tris[t] = {a, b, v};
    tris.push_back({b, c, v});
    tris.push_back({c, a, v});
  }

  std::unordered_map<std::uint64_t, int> owner;
  auto claim = [&](int t) {
    for (int k = 0; k < 3; ++k) {
      owner[directed_key(tris[t][k], tris[t][(k + 1) % 3])] = t;
    }
  };
  auto release = [&](int t) {
    for (int k = 0; k < 3; ++k) {
      owner.erase(directed_key(tris[t][k], tris[t][(k + 1) % 3]));
    }
  };
  for (int t = 0; t < static_cast<int>(tris.size()); ++t) claim(t);
  auto ccw = [&](std::array<VertexId, 3> t) {
    if (orient(pts[t[0]], pts[t[1]], pts[t[2]]) < 0) std::swap(t[1], t[2]);
    return t;
  };
  const int flips = 3 * n;
  for (int it = 0; it < flips && tris.size() > 1; ++it) {
    const int t1 = rng.below(static_cast<int>(tris.size()));
    const int k = rng.below(3);
    const VertexId a = tris[t1][k];
    const VertexId b = tris[t1][(k + 1) % 3];
    const VertexId c = tris[t1][(k + 2) % 3];
    auto found = owner.find(directed_key(b, a));
    if (found == owner.end()) continue;
    const int t2 = found->second;
    VertexId d = kNone;
    for (VertexId x : tris[t2]) {
      if (x != a && x != b) d = x;
    }
    const double sa = orient(pts[c], pts[d], pts[a]);
    const double sb = orient(pts[c], pts[d], pts[b]);
    const double scale = 1e-9 * r * r;
    if (!((sa > scale && sb < -scale) || (sa < -scale && sb > scale))) continue;
    if (owner.count(directed_key(c, d)) || owner.count(directed_key(d, c))) {
      continue;
    }
    release(t1);
    release(t2);
    tris[t1] = ccw({c, a, d});
    tris[t2] = ccw({d, b, c});
    claim(t1);
    claim(t2);
  }

  std::vector<std::vector<VertexId>> faces;
  for (const auto& t : tris) faces.push_back({t[0], t[1], t[2]});
  const std::vector<VertexId> outer{2, 1, 0};
  faces.push_back(outer);
  return face_cycles_with_outer(n, faces, pts, &outer);
}

PlaneGraph random_plane(int n, std::uint64_t seed, double deletion_probability,
                        bool keep_min_degree3) {
  PlaneGraph g = random_triangulation(n, seed);
  Rng rng(mix(seed, 0x706c616e65ULL));
  std::vector<EdgeId> order = g.edges();
  rng.shuffle(order);
  for (EdgeId e : order) {
    if (!rng.chance(deletion_probability)) continue;
    const auto [u, v] = g.endpoints(e);
    if (keep_min_degree3 && (g.degree(u) <= 3 || g.degree(v) <= 3)) continue;
    const auto [f1, f2] = g.flanking_faces(e);
    if (f1 == f2) continue;
    g.remove_edge(e);
  }
  return rebuild(g);
}

PlaneGraph platonic(std::string_view solid) {
  auto polar = [](double radius, double degrees) {
    const double t = degrees * std::numbers::pi / 180;
    return Point{radius * std::cos(t), radius * std::sin(t)};
  };
  std::vector<Point> pts;
  std::vector<std::pair<VertexId, VertexId>> edges;
  if (solid == "tetrahedron") {
    pts = {{0, 0}, polar(2, 90), polar(2, 210), polar(2, 330)};
    edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {3, 1}};
  } else if (solid == "cube") {
    for (int i = 0; i < 4; ++i) pts.push_back(polar(2, 45 + 90 * i));
    for (int i = 0; i < 4; ++i) pts.push_back(polar(1, 45 + 90 * i));
    for (int i = 0; i < 4; ++i) {
      edges.emplace_back(i, (i + 1) % 4);
      edges.emplace_back(4 + i, 4 + (i + 1) % 4);
      edges.emplace_back(i, 4 + i);
    }
  } else if (solid == "octahedron") {
    for (int i = 0; i < 3; ++i) pts.push_back(polar(3, 90 + 120 * i));
    for (int i = 0; i < 3; ++i) pts.push_back(polar(1, 150 + 120 * i));
    for (int i = 0; i < 3; ++i) {
      edges.emplace_back(i, (i + 1) % 3);
      edges.emplace_back(3 + i, 3 + (i + 1) % 3);
      edges.emplace_back(3 + i, i);
      edges.emplace_back(3 + i, (i + 1) % 3);
    }
  } else if (solid == "dodecahedron") {
    // Rings: A (0-4), B (5-14, alternating radius), C (15-19).
    for (int i = 0; i < 5; ++i) pts.push_back(polar(4, 90 + 72 * i));
    for (int j = 0; j < 10; ++j) pts.push_back(polar(j % 2 ? 2 : 3, 90 + 36 * j));
    for (int i = 0; i < 5; ++i) pts.push_back(polar(1, 126 + 72 * i));
    for (int i = 0; i < 5; ++i) {
      edges.emplace_back(i, (i + 1) % 5);
      edges.emplace_back(i, 5 + 2 * i);
      edges.emplace_back(15 + i, 15 + (i + 1) % 5);
      edges.emplace_back(15 + i, 5 + 2 * i + 1);
    }
    for (int j = 0; j < 10; ++j) edges.emplace_back(5 + j, 5 + (j + 1) % 10);
  } else if (solid == "icosahedron") {
    // Outer triangle A (0-2), hexagon M (3-8), inner triangle I (9-11).
    for (int i = 0; i < 3; ++i) pts.push_back(polar(6, 90 + 120 * i));
    for (int j = 0; j < 6; ++j) pts.push_back(polar(2, 90 + 60 * j));
    for (int k = 0; k < 3; ++k) pts.push_back(polar(1, 150 + 120 * k));
    auto m = [](int j) { return 3 + ((j % 6) + 6) % 6; };
    for (int i = 0; i < 3; ++i) {
      edges.emplace_back(i, (i + 1) % 3);
      edges.emplace_back(9 + i, 9 + (i + 1) % 3);
      for (int d = -1; d <= 1; ++d) edges.emplace_back(i, m(2 * i + d));
      for (int d = 0; d <= 2; ++d) edges.emplace_back(9 + i, m(2 * i + d));
    }
    for (int j = 0; j < 6; ++j) edges.emplace_back(m(j), m(j + 1));
  } else {
    throw Error(ErrorCode::kPreconditionFailed,
                "unknown solid " + std::string(solid));
  }
  return from_straight_line(pts, edges);
}

const std::vector<std::string>& figure_vertex_names() {
  static const std::vector<std::string> names{"a",  "b",  "c",  "s",  "v1",
                                              "v2", "v3", "v4", "v5", "v6"};
  return names;
}

PlaneGraph figure_no_guard_coloring() {
  enum : VertexId { a, b, c, s, v1, v2, v3, v4, v5, v6 };
  const std::vector<Point> pts{{0, 0}, {10, 0}, {5, 10}, {5, 1}, {4, 7},
                               {2, 3}, {4, 4},  {6, 4},  {8, 3}, {6, 7}};
  const std::vector<std::pair<VertexId, VertexId>> edges{
      {a, b},   {b, c},   {c, a},   {a, v2},  {v2, v1}, {v1, c},  {c, v6},
      {v6, v5}, {v5, b},  {v1, v6}, {a, s},   {b, s},   {v2, s},  {v5, s},
      {v2, v3}, {v1, v3}, {v5, v4}, {v6, v4}, {v3, s},  {v4, s},  {v3, v4}};
  return from_straight_line(pts, edges);
}

PlaneGraph far_quads(int n, std::uint64_t seed, int separation,
                     double grow_probability, int attempts) {
  require(n >= 6, "far_quads needs n >= 6");
  for (int attempt = 0; attempt < attempts; ++attempt) {
    const std::uint64_t s = mix(seed, static_cast<std::uint64_t>(attempt));
    PlaneGraph g = random_triangulation(n, s);
    Rng rng(mix(s, 0x71756164ULL));
    std::vector<std::vector<VertexId>> quads;

    auto far_enough = [&](const std::vector<VertexId>& verts) {
      std::vector<int> dist(g.vertex_slots(), -1);
      std::deque<VertexId> queue;
      for (VertexId v : verts) {
        dist[v] = 0;
        queue.push_back(v);
      }
      while (!queue.empty()) {
        const VertexId x = queue.front();
        queue.pop_front();
        if (dist[x] + 1 >= separation) continue;
        for (VertexId y : g.neighbors(x)) {
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            queue.push_back(y);
          }
        }
      }
      for (const auto& q : quads) {
        for (VertexId v : q) {
          if (dist[v] >= 0) return false;
        }
      }
      return true;
    };
    // Removes e when both sides are triangles and the endpoints keep degree
    // three; returns the merged face.
    auto merge_triangles = [&](EdgeId e, FaceId keep_away) -> FaceId {
      if (!g.has_edge(e)) return kNone;
      const auto [u, v] = g.endpoints(e);
      const auto [f1, f2] = g.flanking_faces(e);
      if (f1 == keep_away || f2 == keep_away) return kNone;
      if (!g.is_triangle(f1) || !g.is_triangle(f2)) return kNone;
      if (g.degree(u) < 4 || g.degree(v) < 4) return kNone;
      const Dart d = 2 * e;
      const Dart probe = g.next(d);
      g.remove_edge(e);
      return g.face_of(probe);
    };
    // Widens the triangle across side (a, b) of quad q into a 5-face.
    auto grow = [&](FaceId q, VertexId a, VertexId b) {
      const FaceId t = g.face_of(g.dart(b, a)) == q ? g.face_of(g.dart(a, b))
                                                    : g.face_of(g.dart(b, a));
      if (!g.is_triangle(t)) return;
      std::vector<EdgeId> sides;
      const auto cyc = g.boundary_cycle(t);
      for (int i = 0; i < 3; ++i) {
        const VertexId x = cyc[i];
        const VertexId y = cyc[(i + 1) % 3];
        if ((x == a && y == b) || (x == b && y == a)) continue;
        sides.push_back(*g.find_edge(x, y));
      }
      rng.shuffle(sides);
      for (EdgeId first : sides) {
        const auto [x, y] = g.endpoints(first);
        const FaceId mid = merge_triangles(first, q);
        if (mid == kNone) continue;
        std::vector<EdgeId> next_sides;
        const auto mc = g.boundary_cycle(mid);
        for (std::size_t i = 0; i < mc.size(); ++i) {
          const VertexId p = mc[i];
          const VertexId r = mc[(i + 1) % mc.size()];
          if ((p == a && r == b) || (p == b && r == a)) continue;
          next_sides.push_back(*g.find_edge(p, r));
        }
        rng.shuffle(next_sides);
        for (EdgeId second : next_sides) {
          const auto [p, r] = g.endpoints(second);
          const auto [f1, f2] = g.flanking_faces(second);
          const FaceId other = f1 == mid ? f2 : f1;
          if (other == q || !g.is_triangle(other)) continue;
          if (g.degree(p) < 4 || g.degree(r) < 4) continue;
          g.remove_edge(second);
          return;
        }
        g.insert_edge(x, y, mid);
        return;
      }
    };

    std::vector<EdgeId> order = g.edges();
    rng.shuffle(order);
    for (EdgeId e : order) {
      if (!g.has_edge(e)) continue;
      const auto [f1, f2] = g.flanking_faces(e);
      if (!g.is_triangle(f1) || !g.is_triangle(f2)) continue;
      std::vector<VertexId> verts = g.face_vertices(f1);
      for (VertexId v : g.face_vertices(f2)) verts.push_back(v);
      std::sort(verts.begin(), verts.end());
      verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
      if (!far_enough(verts)) continue;
      const FaceId q = merge_triangles(e, kNone);
      if (q == kNone) continue;
      quads.push_back(verts);
      if (rng.chance(grow_probability)) {
        const auto cyc = g.boundary_cycle(q);
        for (int i = 0; i < 4; ++i) grow(q, cyc[i], cyc[(i + 1) % 4]);
      }
    }
    const auto found = quad_faces(g);
    if (found.empty() || g.component_count() != 1) continue;
    if (min_quad_hop_distance(g) < separation) continue;
    return rebuild(g);
  }
  throw Error(ErrorCode::kGenerationFailed,
              "far_quads: no instance after " + std::to_string(attempts) +
                  " attempts");
}

PlaneGraph generate(const GeneratorSpec& spec) {
  switch (spec.family) {
    case Family::kDisjointTriangles: return disjoint_triangles(spec.size);
    case Family::kFanOuterplanar: return fan_outerplanar(spec.size);
    case Family::kRandomTriangulation:
      return random_triangulation(spec.size, spec.seed);
    case Family::kRandomPlane:
      return random_plane(spec.size, spec.seed, spec.deletion_probability,
                          spec.keep_min_degree3);
    case Family::kPlatonic: return platonic(spec.solid);
    case Family::kFarQuads:
      return far_quads(spec.size, spec.seed, spec.quad_separation,
                       spec.grow_probability, spec.attempts);
    case Family::kFigureNgc: return figure_no_guard_coloring();
  }
  throw Error(ErrorCode::kPreconditionFailed, "unknown family");
}

}  // namespace edgeguard
