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

#include "edgeguard/cli/layout.hpp"
#include "edgeguard/plane_graph.hpp"

namespace edgeguard::cli {

// SVG 1.1 drawing of g. Guard edges carry the extra class "guard"; every
// face gets a text label.
std::string render_svg(const PlaneGraph& g, const Layout& layout,
                       const std::vector<EdgeId>& guards = {});

}  // namespace edgeguard::cli
