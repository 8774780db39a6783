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

#include "edgeguard/analysis.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "edgeguard/errors.hpp"

namespace edgeguard {

namespace {

template <typename T>
std::vector<T> least_rotation(const std::vector<T>& seq) {
  std::vector<T> best = seq;
  std::vector<T> cur = seq;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

}  // namespace

GraphStats stats(const PlaneGraph& g) {
  GraphStats s;
  s.n = g.vertex_count();
  s.m = g.edge_count();
  s.f = g.face_count();
  s.c = g.component_count();
  s.alpha = static_cast<int>(quad_faces(g).size());
  bool first = true;
  for (VertexId v : g.vertices()) {
    const int d = g.degree(v);
    if (first || d < s.min_degree) s.min_degree = d;
    if (first || d > s.max_degree) s.max_degree = d;
    first = false;
  }
  return s;
}

int face_hop_distance(const PlaneGraph& g, FaceId f1, FaceId f2) {
  if (!g.has_face(f1)) {
    throw Error(ErrorCode::kUnknownFace, "face " + std::to_string(f1));
  }
  if (!g.has_face(f2)) {
    throw Error(ErrorCode::kUnknownFace, "face " + std::to_string(f2));
  }
  std::vector<int> dist(g.vertex_slots(), -1);
  std::vector<char> target(g.vertex_slots(), 0);
  for (VertexId v : g.face_vertices(f2)) target[v] = 1;
  std::deque<VertexId> queue;
  for (VertexId v : g.face_vertices(f1)) {
    dist[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    const VertexId a = queue.front();
    queue.pop_front();
    if (target[a]) return dist[a];
    for (Dart d : g.rotation(a)) {
      const VertexId b = g.head(d);
      if (dist[b] < 0) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
    }
  }
  return kUnreachable;
}

std::vector<FaceId> quad_faces(const PlaneGraph& g) {
  std::vector<FaceId> out;
  for (FaceId f : g.faces()) {
    if (g.is_quad(f)) out.push_back(f);
  }
  return out;
}

int min_quad_hop_distance(const PlaneGraph& g) {
  const auto quads = quad_faces(g);
  int best = kUnreachable;
  for (std::size_t i = 0; i < quads.size(); ++i) {
    for (std::size_t j = i + 1; j < quads.size(); ++j) {
      best = std::min(best, face_hop_distance(g, quads[i], quads[j]));
    }
  }
  return best;
}

std::string canonical_registry(const PlaneGraph& g,
                               const std::vector<VertexId>& relabel,
                               bool outer_flags) {
  auto map = [&](VertexId v) { return relabel.empty() ? v : relabel[v]; };
  std::vector<std::string> faces;
  for (FaceId f : g.faces()) {
    std::vector<std::string> parts;
    for (const auto& walk : g.face_walks(f)) {
      std::vector<VertexId> seq;
      for (Dart d : walk) seq.push_back(map(g.tail(d)));
      std::ostringstream os;
      if (outer_flags) os << (g.on_outer_walk(walk.front()) ? "o" : "h");
      os << "(";
      for (VertexId v : least_rotation(seq)) os << v << ",";
      os << ")";
      parts.push_back(os.str());
    }
    for (VertexId v : g.isolated_in(f)) {
      parts.push_back("i" + std::to_string(map(v)));
    }
    std::sort(parts.begin(), parts.end());
    std::string joined = "[";
    for (const auto& p : parts) joined += p + ";";
    faces.push_back(joined + "]");
  }
  std::sort(faces.begin(), faces.end());
  std::vector<std::pair<VertexId, std::vector<VertexId>>> rots;
  for (VertexId v : g.vertices()) {
    std::vector<VertexId> nb;
    for (VertexId w : g.neighbors(v)) nb.push_back(map(w));
    rots.emplace_back(map(v), least_rotation(nb));
  }
  std::sort(rots.begin(), rots.end());
  std::ostringstream os;
  for (const auto& f : faces) os << f << "\n";
  for (const auto& [v, nb] : rots) {
    os << v << ":";
    for (VertexId w : nb) os << " " << w;
    os << "\n";
  }
  return os.str();
}

bool is_forest(const PlaneGraph& g) {
  return g.vertex_count() - g.edge_count() == g.component_count();
}

}  // namespace edgeguard
