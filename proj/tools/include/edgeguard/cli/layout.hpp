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
#include <vector>

#include "edgeguard/plane_graph.hpp"

namespace edgeguard::cli {

struct Layout {
  // Indexed by vertex slot; dead slots stay at the origin.
  std::vector<Point> pos;
  // "coords", "tutte", "force", or a mix joined by '+' across components.
  std::string method;
};

// Stored coordinates when present. Otherwise each component gets a
// barycentric layout with its outer walk pinned to a circle, or a spring
// layout when that collapses, and components are set side by side.
// Throws LayoutFailed.
Layout compute_layout(const PlaneGraph& g);

}  // namespace edgeguard::cli
