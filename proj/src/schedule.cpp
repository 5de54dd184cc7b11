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

#include "mramsey/schedule.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <cmath>
#include <numbers>

#include "mramsey/error.hpp"
#include "mramsey/format.hpp"

namespace mramsey {

ScalingSchedule::ScalingSchedule(Kind kind, double p) : kind_(kind), p_(p) {
  certificate_ = tail_integral(1.0);
  if (!(std::abs(certificate_ - 1.0) <= 1e-6)) {
    throw Error(ErrorCode::kInvalidSchedule,
                name() + " integrates to " + format_number(certificate_) + ", not 1");
  }
}

ScalingSchedule ScalingSchedule::square() { return ScalingSchedule(Kind::kSquare, 2.0); }
ScalingSchedule ScalingSchedule::loglog() { return ScalingSchedule(Kind::kLogLog, 0.0); }

ScalingSchedule ScalingSchedule::power(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::kInvalidSchedule, "power schedule needs p > 1");
  }
  return ScalingSchedule(Kind::kPower, p);
}

ScalingSchedule ScalingSchedule::parse(const std::string &name) {
  if (name == "square") return square();
  if (name == "loglog") return loglog();
  if (name.rfind("power:", 0) == 0) {
    std::size_t pos = 0;
    double p = 0.0;
    try {
      p = std::stod(name.substr(6), &pos);
    } catch (const std::exception &) {
      pos = 0;
    }
    if (pos == 0 || pos != name.size() - 6) {
      throw Error(ErrorCode::kInvalidSchedule, "bad exponent in '" + name + "'");
    }
    return power(p);
  }
  throw Error(ErrorCode::kInvalidSchedule, "unknown schedule '" + name + "'");
}

double ScalingSchedule::operator()(double x) const {
  switch (kind_) {
    case Kind::kSquare: return x * x;
    case Kind::kLogLog: {
      const double u = x + std::numbers::e - 1.0;
      const double l = std::log(u);
      return u * l * l;
    }
    case Kind::kPower: return std::pow(x, p_) / (p_ - 1.0);
  }
  return 0.0;
}

double ScalingSchedule::tail_integral(double a) const {
  if (!(a >= 1.0)) throw Error(ErrorCode::kInvalidSchedule, "tail integral needs a >= 1");
  if (std::isinf(a)) return 0.0;
  // Substitute x = a e^s and evaluate x / schedule(x) in log space: the
  // loglog tail decays so slowly that a cutoff at the largest double
  // would lose about 1/709 of the mass.
  const double la = std::log(a);
  const auto f = [this, a, la](double s) -> double {
    switch (kind_) {
      case Kind::kSquare: return std::exp(-s) / a;
      case Kind::kPower: return (p_ - 1.0) * std::exp(-(p_ - 1.0) * (s + la));
      case Kind::kLogLog: {
        // u = x + e - 1 = x (1 + r)
        const double r = (std::numbers::e - 1.0) * std::exp(-s) / a;
        const double lu = s + la + std::log1p(r);
        return 1.0 / ((1.0 + r) * lu * lu);
      }
    }
    return 0.0;
  };
  boost::math::quadrature::exp_sinh<double> q;
  return q.integrate(f, 1e-14);
}

std::string ScalingSchedule::name() const {
  switch (kind_) {
    case Kind::kSquare: return "square";
    case Kind::kLogLog: return "loglog";
    case Kind::kPower: return "power:" + format_number(p_);
  }
  return "?";
}

}  // namespace mramsey
