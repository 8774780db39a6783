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

#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace edgeguard {

using VertexId = int;
using EdgeId = int;
using FaceId = int;
// Directed side of an edge: dart 2e runs from the edge's first endpoint to its
// second, dart 2e+1 runs back.
using Dart = int;

inline constexpr int kNone = -1;

struct Point {
  double x = 0;
  double y = 0;
};

// Places `component` inside the face bounded by walk `walk` of component
// `inside_component`. Components are numbered by their smallest vertex;
// walks of a component are numbered in discovery order, and walk 0 is the
// component's outer boundary.
struct NestingHint {
  int component = 0;
  int inside_component = 0;
  int walk = 0;
};

// Interchange form of an embedding: clockwise neighbor lists per vertex.
struct RotationSystem {
  int n = 0;
  std::vector<std::vector<VertexId>> rotations;
  std::vector<NestingHint> nesting;
  std::optional<std::vector<Point>> coords;
};

// An angle at `vertex`, identified by the dart leaving the vertex on the far
// side of the angle. `out` is kNone for an isolated vertex.
struct Corner {
  VertexId vertex = kNone;
  Dart out = kNone;
};

// Combinatorial plane graph: a rotation system plus an explicit face
// registry. Faces may be bounded by several walks (one per boundary
// component) and may contain isolated vertices. Vertex, edge and face ids are
// stable across mutations and never reused.
class PlaneGraph {
 public:
  PlaneGraph() = default;

  static PlaneGraph build(const RotationSystem& spec);

  // Writes an equivalent document. Vertices are compacted and, where needed,
  // relabeled so that each component's outer walk passes through its smallest
  // id. When `relabel` is given it receives old id -> new id (kNone for dead
  // vertices).
  RotationSystem serialize(std::vector<VertexId>* relabel = nullptr) const;

  int vertex_slots() const { return static_cast<int>(rot_.size()); }
  int edge_slots() const { return static_cast<int>(edges_.size()); }
  int face_slots() const { return static_cast<int>(faces_.size()); }

  int vertex_count() const { return live_vertices_; }
  int edge_count() const { return live_edges_; }
  int face_count() const { return live_faces_; }
  int component_count() const;

  bool has_vertex(VertexId v) const;
  bool has_edge(EdgeId e) const;
  bool has_face(FaceId f) const;

  std::vector<VertexId> vertices() const;
  std::vector<EdgeId> edges() const;
  std::vector<FaceId> faces() const;

  int degree(VertexId v) const { return static_cast<int>(rot_[v].size()); }
  // Out-darts of v in clockwise order.
  const std::vector<Dart>& rotation(VertexId v) const { return rot_[v]; }
  std::vector<VertexId> neighbors(VertexId v) const;
  // Index of dart d within the rotation of its tail.
  int rotation_index(Dart d) const { return pos_[d]; }

  std::pair<VertexId, VertexId> endpoints(EdgeId e) const;
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const {
    return find_edge(u, v).has_value();
  }

  VertexId tail(Dart d) const {
    return (d & 1) ? edges_[d >> 1].v : edges_[d >> 1].u;
  }
  VertexId head(Dart d) const { return tail(d ^ 1); }
  static EdgeId edge_of(Dart d) { return d >> 1; }
  static Dart twin(Dart d) { return d ^ 1; }
  // Dart out of `u` running to `v`; the edge must exist.
  Dart dart(VertexId u, VertexId v) const;

  // Successor and predecessor along the face walk.
  Dart next(Dart d) const;
  Dart prev(Dart d) const;

  FaceId face_of(Dart d) const { return walks_[dart_walk_[d]].face; }
  // True if d lies on the walk separating its component from the face that
  // contains it.
  bool on_outer_walk(Dart d) const { return walks_[dart_walk_[d]].outer; }
  // Darts of the walk through d, in walk order.
  const std::vector<Dart>& walk_of(Dart d) const {
    return walks_[dart_walk_[d]].darts;
  }

  std::vector<std::vector<Dart>> face_walks(FaceId f) const;
  const std::vector<VertexId>& isolated_in(FaceId f) const {
    return faces_[f].isolated;
  }
  // Face that contains an isolated vertex, kNone otherwise.
  FaceId isolated_face(VertexId v) const { return iso_face_[v]; }
  // Sorted distinct boundary vertices, isolated vertices included.
  std::vector<VertexId> face_vertices(FaceId f) const;
  bool on_face(VertexId v, FaceId f) const;
  // Number of dart steps over all walks; a bridge counts twice.
  int side_count(FaceId f) const;
  // True for a face bounded by one simple cycle of exactly k vertices.
  bool is_simple_face(FaceId f, int k) const;
  bool is_triangle(FaceId f) const { return is_simple_face(f, 3); }
  bool is_quad(FaceId f) const { return is_simple_face(f, 4); }
  // Tail sequence of a single-walk face.
  std::vector<VertexId> boundary_cycle(FaceId f) const;
  // Distinct faces around v, in rotation order.
  std::vector<FaceId> faces_at(VertexId v) const;
  // Faces on the two sides of e: (face of dart 2e, face of dart 2e+1).
  std::pair<FaceId, FaceId> flanking_faces(EdgeId e) const;

  // Corners of v that open onto face f.
  std::vector<Corner> corners_on(VertexId v, FaceId f) const;

  EdgeId insert_edge(VertexId u, VertexId v, FaceId f);
  EdgeId insert_edge_at(Corner cu, Corner cv);
  void remove_edge(EdgeId e);
  void delete_vertices(std::span<const VertexId> victims);

  const std::optional<std::vector<Point>>& coords() const { return coords_; }
  void set_coords(std::optional<std::vector<Point>> coords);

  // Full consistency check of rotations, walks, faces and Euler's formula.
  // Throws InvariantViolated.
  void check_invariants() const;

  // The one non-outer walk of f, or nullptr for the unbounded face.
  const std::vector<Dart>* host_walk(FaceId f) const;

 private:
  struct EdgeRec {
    VertexId u = kNone;
    VertexId v = kNone;
    bool alive = false;
  };
  struct WalkRec {
    std::vector<Dart> darts;
    FaceId face = kNone;
    bool outer = false;
    bool alive = false;
  };
  struct FaceRec {
    std::vector<int> walks;
    std::vector<VertexId> isolated;
    bool alive = false;
  };

  void require_vertex(VertexId v) const;
  void require_edge(EdgeId e) const;
  void require_face(FaceId f) const;

  int trace_walk(Dart start, FaceId f, bool outer);
  void kill_walk(int w);
  FaceId new_face();
  void kill_face(FaceId f);
  void add_isolated(VertexId v, FaceId f);
  void drop_isolated(VertexId v);
  void rotation_insert(VertexId v, int index, Dart d);
  void rotation_erase(Dart d);
  FaceId corner_face(const Corner& c) const;

  std::vector<char> v_alive_;
  std::vector<std::vector<Dart>> rot_;
  std::vector<int> pos_;
  std::vector<EdgeRec> edges_;
  std::vector<int> dart_walk_;
  std::vector<WalkRec> walks_;
  std::vector<FaceRec> faces_;
  std::vector<FaceId> iso_face_;
  std::optional<std::vector<Point>> coords_;
  int live_vertices_ = 0;
  int live_edges_ = 0;
  int live_faces_ = 0;
};

// Vertex sets of the connected components, each sorted, ordered by their
// smallest vertex. Isolated vertices form singleton components.
std::vector<std::vector<VertexId>> connected_components(const PlaneGraph& g);

}  // namespace edgeguard
