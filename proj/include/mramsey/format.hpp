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

#include <algorithm>
#include <cmath>
#include <string>

namespace mramsey {

// Shortest round-trip decimal for a double ("10", "0.25", "1.5811388300841898").
std::string format_number(double value);

// ceil() that ignores a relative rounding residue, so that e.g. the computed
// log_2(4) = 2.0000000000000004 rounds to 2 rather than 3.
inline double ceil_tolerant(double x) {
  const double slack = 1e-9 * std::max(1.0, std::abs(x));
  return std::ceil(x - slack);
}

// a <= b up to a relative slack absorbing pow()/log() rounding.
inline bool le_rel(double a, double b, double rel = 1e-12) {
  return a <= b + rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace mramsey
