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

// Exact minimum edge guard sets by set-cover branch and bound.

#pragma once

#include <cstdint>
#include <optional>

#include "edgeguard/guard_set.hpp"
#include "edgeguard/plane_graph.hpp"

namespace edgeguard {

struct OracleOptions {
  // Graphs with more edges are refused with BudgetExceeded.
  int edge_budget = 64;
  // Search nodes allowed before giving up with BudgetExceeded.
  std::int64_t node_budget = 200'000'000;
};

// Smallest guard set; among those, the lexicographically least sorted edge
// list. Throws Infeasible if some face cannot be guarded at all.
GuardSet minimum_guard_set(const PlaneGraph& g,
                           std::optional<int> upper_hint = std::nullopt,
                           const OracleOptions& opts = {});

bool is_guardable_with(const PlaneGraph& g, int k,
                       const OracleOptions& opts = {});

}  // namespace edgeguard
