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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mramsey {

enum class ErrorCode {
  kAsymmetricInput,
  kNegativeDistance,
  kZeroDistance,
  kTriangleViolation,
  kDisconnectedGraph,
  kMalformedInput,
  kEmptySubspace,
  kKOutOfRange,
  kUnknownFixture,
  kInvalidParameters,
  kForeignLeaf,
  kEmptyCore,
  kDeltaOutOfRange,
  kInvalidDelta,
  kInvalidFraction,
  kInvalidSchedule,
  kUnknownPoint,
  kEmptyPath,
  kInvalidNorm,
  kNotNonExpansive,
  kZeroDistancePair,
  kGuaranteeViolation,
  kIo,
};

std::string_view error_code_name(ErrorCode code) noexcept;

//! Library-wide exception. Every failure carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

//! Thrown when a proven inequality fails at run time. Carries both sides.
class GuaranteeViolation : public Error {
 public:
  GuaranteeViolation(const std::string &rule, double lhs, double rhs);

  const std::string &rule() const noexcept { return rule_; }
  double lhs() const noexcept { return lhs_; }
  double rhs() const noexcept { return rhs_; }

 private:
  std::string rule_;
  double lhs_;
  double rhs_;
};

// Checks lhs <= rhs and throws GuaranteeViolation otherwise.
void require_le(const char *rule, double lhs, double rhs);
// Same, up to a 1e-12 relative slack for quantities built from pow()/log().
void require_le_rel(const char *rule, double lhs, double rhs);

}  // namespace mramsey
