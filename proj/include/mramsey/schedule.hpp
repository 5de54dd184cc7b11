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

#include <string>

namespace mramsey {

/// Growth function for the scaling construction, normalized so that
/// the integral of 1/schedule over [1, inf) is 1.
class ScalingSchedule {
 public:
  enum class Kind { kSquare, kLogLog, kPower };

  static ScalingSchedule square();   // x^2
  static ScalingSchedule loglog();   // (x+e-1) ln^2(x+e-1)
  static ScalingSchedule power(double p);  // x^p/(p-1), p > 1
  // "square", "loglog", "power:<p>"
  static ScalingSchedule parse(const std::string &name);

  double operator()(double x) const;
  // integral of dx/schedule(x) over [a, inf), a >= 1, by exp-sinh quadrature
  double tail_integral(double a) const;
  // tail_integral(1), checked to be 1 within 1e-6 at construction
  double certificate() const noexcept { return certificate_; }

  Kind kind() const noexcept { return kind_; }
  double exponent() const noexcept { return p_; }
  std::string name() const;

 private:
  ScalingSchedule(Kind kind, double p);

  Kind kind_;
  double p_;
  double certificate_ = 0.0;
};

}  // namespace mramsey
