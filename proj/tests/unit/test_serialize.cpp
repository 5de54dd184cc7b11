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

#include "fixtures.hpp"
#include "mramsey/error.hpp"
#include "mramsey/serialize.hpp"

namespace mramsey {
namespace {

TEST(Serialize, SubspaceRoundTrip) {
  const Subspace s = testing::ids({0, 3, 9, 10});
  EXPECT_EQ(subspace_from_json(to_json(s)), s);
  EXPECT_EQ(dump(to_json(Subspace{})), "[]\n");
}

TEST(Serialize, TreeRoundTripKeepsDistances) {
  const MetricSpace x = testing::fixture({"planar", "40", "2"});
  const RamseyResult res = ramsey_subspace(x, WeightFunction::unit(40), 3);
  const Json j = to_json(res.tree);
  const HstTree back = tree_from_json(j);
  ASSERT_EQ(back.size(), res.tree.size());
  EXPECT_EQ(back.k(), res.tree.k());
  for (PointId a : res.s) {
    for (PointId b : res.s) EXPECT_EQ(um_point_distance(back, a, b), um_point_distance(res.tree, a, b));
  }
  EXPECT_EQ(dump(to_json(back)), dump(j));
}

TEST(Serialize, ParamsRoundTrip) {
  RamseyParams p;
  p.variant = RamseyVariant::kScaling;
  p.delta = 0.25;
  p.schedule = ScalingSchedule::power(1.5);
  const RamseyParams q = params_from_json(to_json(p));
  EXPECT_EQ(q.variant, RamseyVariant::kScaling);
  EXPECT_EQ(q.delta, 0.25);
  ASSERT_TRUE(q.schedule.has_value());
  EXPECT_EQ(q.schedule->name(), p.schedule->name());

  RamseyParams r;
  r.variant = RamseyVariant::kPartial;
  r.t = partial_t(0.1, 0.05);
  r.delta = 0.1;
  r.epsilon = 0.05;
  const RamseyParams s = params_from_json(to_json(r));
  EXPECT_EQ(s.variant, RamseyVariant::kPartial);
  EXPECT_EQ(s.t, r.t);
  EXPECT_EQ(s.epsilon, 0.05);
  EXPECT_FALSE(s.schedule.has_value());
}

TEST(Serialize, DeterministicDump) {
  const MetricSpace x = testing::c22();
  const std::string a = dump(to_json(ramsey_subspace(x, WeightFunction::unit(4), 2)));
  const std::string b = dump(to_json(ramsey_subspace(x, WeightFunction::unit(4), 2)));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.back(), '\n');
}

TEST(Serialize, MalformedTreeRejected) {
  EXPECT_ANY_THROW(tree_from_json(Json::parse(R"({"k":1,"root":3,"nodes":[]})")));
}

}  // namespace
}  // namespace mramsey
