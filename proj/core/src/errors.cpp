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

#include "edgeguard/errors.hpp"

namespace edgeguard {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedRotation: return "MalformedRotation";
    case ErrorCode::kNonPlanarEmbedding: return "NonPlanarEmbedding";
    case ErrorCode::kBadNesting: return "BadNesting";
    case ErrorCode::kUnknownVertex: return "UnknownVertex";
    case ErrorCode::kUnknownEdge: return "UnknownEdge";
    case ErrorCode::kUnknownFace: return "UnknownFace";
    case ErrorCode::kEdgeExists: return "EdgeExists";
    case ErrorCode::kNotOnFace: return "NotOnFace";
    case ErrorCode::kAmbiguousOccurrence: return "AmbiguousOccurrence";
    case ErrorCode::kMalformedDocument: return "MalformedDocument";
    case ErrorCode::kPreconditionFailed: return "PreconditionFailed";
    case ErrorCode::kStepNotFound: return "StepNotFound";
    case ErrorCode::kVerificationFailed: return "VerificationFailed";
    case ErrorCode::kNotTwoDegenerate: return "NotTwoDegenerate";
    case ErrorCode::kNoConfiguration: return "NoConfiguration";
    case ErrorCode::kInvalidWitness: return "InvalidWitness";
    case ErrorCode::kInvariantViolated: return "InvariantViolated";
    case ErrorCode::kUntriangulatableFace: return "UntriangulatableFace";
    case ErrorCode::kTimeout: return "Timeout";
    case ErrorCode::kColoringMismatch: return "ColoringMismatch";
    case ErrorCode::kNotAGuardColoring: return "NotAGuardColoring";
    case ErrorCode::kQuadsTooClose: return "QuadsTooClose";
    case ErrorCode::kSeedConflict: return "SeedConflict";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kGenerationFailed: return "GenerationFailed";
    case ErrorCode::kLayoutFailed: return "LayoutFailed";
  }
  return "Unknown";
}

}  // namespace edgeguard
