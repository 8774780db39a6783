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

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edgeguard/guard_set.hpp"
#include "edgeguard/plane_graph.hpp"

namespace edgeguard {

// Graph documents: {"n", "rotations", "nesting"?, "coords"?}.
RotationSystem parse_graph_document(std::string_view text);
std::string write_graph_document(const RotationSystem& spec);

// Guard documents: {"edges": [[u, v], ...], "algorithm", "bound"}.
struct GuardDocument {
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::string algorithm;
  std::string bound;
};

GuardDocument parse_guard_document(std::string_view text);
std::string write_guard_document(const GuardDocument& doc);

// Endpoint pairs of a guard set, each pair ascending, sorted.
GuardDocument to_document(const PlaneGraph& g, const GuardSet& gs);
// Maps endpoint pairs back to edge ids; throws UnknownEdge for a pair that is
// not an edge of g.
std::vector<EdgeId> resolve_edges(const PlaneGraph& g, const GuardDocument& doc);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

PlaneGraph load_graph(const std::string& path);

}  // namespace edgeguard
