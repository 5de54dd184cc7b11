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

#include <gtest/gtest.h>

#include <cmath>

#include "mramsey/error.hpp"
#include "mramsey/schedule.hpp"

namespace mramsey {
namespace {

TEST(Schedule, DefaultCertificatesIntegrateToOne) {
  EXPECT_NEAR(ScalingSchedule::square().certificate(), 1.0, 1e-9);
  EXPECT_NEAR(ScalingSchedule::loglog().certificate(), 1.0, 1e-9);
  EXPECT_NEAR(ScalingSchedule::power(3).certificate(), 1.0, 1e-9);
}

TEST(Schedule, TailIntegralsMatchClosedForms) {
  const double e = std::exp(1.0);
  for (double a : {1.0, 1.5, 2.0, 10.0, 1e3, 1e6}) {
    EXPECT_NEAR(ScalingSchedule::square().tail_integral(a), 1.0 / a, 1e-10 / a) << a;
    const double ll = 1.0 / std::log(a + e - 1.0);
    EXPECT_NEAR(ScalingSchedule::loglog().tail_integral(a), ll, 1e-10 * ll) << a;
    const double pw = std::pow(a, -1.5);
    EXPECT_NEAR(ScalingSchedule::power(2.5).tail_integral(a), pw, 1e-10 * pw) << a;
  }
}

TEST(Schedule, Values) {
  EXPECT_EQ(ScalingSchedule::square()(3.0), 9.0);
  EXPECT_NEAR(ScalingSchedule::loglog()(1.0), std::exp(1.0), 1e-15);
  EXPECT_NEAR(ScalingSchedule::power(3)(2.0), 4.0, 1e-15);
}

TEST(Schedule, Parse) {
  EXPECT_EQ(ScalingSchedule::parse("square").kind(), ScalingSchedule::Kind::kSquare);
  EXPECT_EQ(ScalingSchedule::parse("loglog").kind(), ScalingSchedule::Kind::kLogLog);
  const ScalingSchedule p = ScalingSchedule::parse("power:4");
  EXPECT_EQ(p.kind(), ScalingSchedule::Kind::kPower);
  EXPECT_EQ(p.exponent(), 4.0);
  EXPECT_EQ(ScalingSchedule::parse(p.name()).exponent(), 4.0);
  EXPECT_THROW(ScalingSchedule::parse("cubic"), Error);
  EXPECT_THROW(ScalingSchedule::power(1.0), Error);
}

}  // namespace
}  // namespace mramsey
