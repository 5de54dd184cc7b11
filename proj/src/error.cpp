// Copyright 2026 The mramsey Authors
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

#include "mramsey/error.hpp"

#include "mramsey/format.hpp"

namespace mramsey {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kAsymmetricInput: return "AsymmetricInput";
    case ErrorCode::kNegativeDistance: return "NegativeDistance";
    case ErrorCode::kZeroDistance: return "ZeroDistance";
    case ErrorCode::kTriangleViolation: return "TriangleViolation";
    case ErrorCode::kDisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::kMalformedInput: return "MalformedInput";
    case ErrorCode::kEmptySubspace: return "EmptySubspace";
    case ErrorCode::kKOutOfRange: return "KOutOfRange";
    case ErrorCode::kUnknownFixture: return "UnknownFixture";
    case ErrorCode::kInvalidParameters: return "InvalidParameters";
    case ErrorCode::kForeignLeaf: return "ForeignLeaf";
    case ErrorCode::kEmptyCore: return "EmptyCore";
    case ErrorCode::kDeltaOutOfRange: return "DeltaOutOfRange";
    case ErrorCode::kInvalidDelta: return "InvalidDelta";
    case ErrorCode::kInvalidFraction: return "InvalidFraction";
    case ErrorCode::kInvalidSchedule: return "InvalidSchedule";
    case ErrorCode::kUnknownPoint: return "UnknownPoint";
    case ErrorCode::kEmptyPath: return "EmptyPath";
    case ErrorCode::kInvalidNorm: return "InvalidNorm";
    case ErrorCode::kNotNonExpansive: return "NotNonExpansive";
    case ErrorCode::kZeroDistancePair: return "ZeroDistancePair";
    case ErrorCode::kGuaranteeViolation: return "GuaranteeViolation";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

GuaranteeViolation::GuaranteeViolation(const std::string &rule, double lhs,
                                       double rhs)
    : Error(ErrorCode::kGuaranteeViolation,
            rule + " (lhs=" + format_number(lhs) + ", rhs=" +
                format_number(rhs) + ")"),
      rule_(rule),
      lhs_(lhs),
      rhs_(rhs) {}

void require_le(const char *rule, double lhs, double rhs) {
  if (!(lhs <= rhs)) throw GuaranteeViolation(rule, lhs, rhs);
}

void require_le_rel(const char *rule, double lhs, double rhs) {
  if (!le_rel(lhs, rhs)) throw GuaranteeViolation(rule, lhs, rhs);
}

}  // namespace mramsey
