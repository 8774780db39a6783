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

// Iterative guarding: repeatedly pick a few vertices V' and guard edges E'
// that cover every face around V', then delete V'.

#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "edgeguard/guard_set.hpp"
#include "edgeguard/plane_graph.hpp"
#include "edgeguard/rational.hpp"

namespace edgeguard {

enum class Rule {
  kDegree0or1,
  kDegree2,
  kDeg3AdjacentNeighbors,
  kDeg3Generic,
  kLebesgueTriangle,
  kDeg3Triangle,
  kL1,
  kL2a,
  kL2b,
  kL3,
  kL4,
  kL5,
  kL6,
  kL7,
};

std::string_view rule_name(Rule r);

struct ReductionStep {
  std::vector<EdgeId> guard_edges;
  std::vector<VertexId> removed_vertices;
  Rule rule = Rule::kDegree0or1;
};

// A located configuration. Edge configurations name the low-degree endpoint
// `u` and the other endpoint `v` of `edge`; L6 also names the 4-face and L7
// names only the 5-face. Lebesgue configurations name the vertex `u` and the
// small face it lies on.
struct Configuration {
  Rule tag = Rule::kL1;
  VertexId u = kNone;
  VertexId v = kNone;
  EdgeId edge = kNone;
  FaceId face = kNone;
};

enum class EdgeStrength { kWeak, kSemiweak, kStrong };

std::string_view strength_name(EdgeStrength s);

// Counts triangles among the two faces on either side of e.
EdgeStrength classify_edge(const PlaneGraph& g, EdgeId e);

using StepProvider =
    std::function<std::optional<ReductionStep>(const PlaneGraph&)>;

// Runs the loop until the working graph is a forest and checks the union of
// all E' against `g`. Every step is checked before its vertices are deleted.
// Throws StepNotFound, InvariantViolated or VerificationFailed.
GuardSet run_iterative(const PlaneGraph& g, const StepProvider& provider,
                       const Rational& c, std::string_view algorithm,
                       std::vector<ReductionStep>* trace = nullptr);

// With `protect_quads`, a low-degree vertex whose removal would leave a new
// 4-face is removed together with two neighbors and a guard edge instead.
std::optional<ReductionStep> find_low_degree_step(const PlaneGraph& g,
                                                  bool protect_quads);

bool is_two_degenerate(const PlaneGraph& g);

GuardSet guard_two_degenerate(const PlaneGraph& g);

// Throws NoConfiguration.
Configuration find_lebesgue_configuration(const PlaneGraph& g);

GuardSet guard_two_fifths(const PlaneGraph& g);

// All configurations present, in priority order L1, L2a, L2b, L3, L4, L5, L6,
// L7 and by witness ids within a class. `visit` returns true to stop.
void for_each_borodin_configuration(
    const PlaneGraph& g, const std::function<bool(const Configuration&)>& visit);

// First configuration in priority order. Throws NoConfiguration.
Configuration find_borodin_configuration(const PlaneGraph& g);

// Throws InvalidWitness if `cfg` does not hold in g and InvariantViolated if
// the construction cannot be completed.
ReductionStep step_for_configuration(const PlaneGraph& g,
                                     const Configuration& cfg);

GuardSet guard_three_eighths(const PlaneGraph& g);

// Checks that E' exists, respects the ratio c and, except for degree 0/1
// removals, guards every face around V'.
bool step_is_valid(const PlaneGraph& g, const ReductionStep& step,
                   const Rational& c);

}  // namespace edgeguard
