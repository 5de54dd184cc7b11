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

#include "fixtures.hpp"
#include "mramsey/analysis.hpp"
#include "mramsey/error.hpp"
#include "mramsey/ramsey.hpp"

namespace mramsey {
namespace {

const double kInf = INFINITY;

TEST(Distortion, IdentityIsOne) {
  const MetricSpace x = testing::fixture({"planar", "20", "1"});
  const auto id = [&](PointId a, PointId b) { return x.dist(a, b); };
  const DistortionReport r = distortion_report(x, id, subspace_pairs(x.all()), {1, 2, 4, kInf});
  EXPECT_EQ(r.pairs, 190u);
  EXPECT_EQ(r.max_ratio, 1.0);
  EXPECT_EQ(r.min_ratio, 1.0);
  EXPECT_EQ(r.worst, 1.0);
  EXPECT_EQ(r.average, 1.0);
  for (auto [q, v] : r.lq) EXPECT_DOUBLE_EQ(v, 1.0) << q;
}

TEST(Distortion, TwoRatioMoments) {
  const DistortionReport r = report_from_ratios({1.0, 2.0}, {2.0, 1.0, kInf}, DistortionMode::kNonContractive);
  ASSERT_EQ(r.lq.size(), 3u);
  EXPECT_EQ(r.lq[0].first, 1.0);
  EXPECT_DOUBLE_EQ(r.lq[0].second, 1.5);
  EXPECT_DOUBLE_EQ(r.lq[1].second, std::sqrt(2.5));
  EXPECT_EQ(r.lq[2].second, 2.0);
  EXPECT_EQ(r.worst, 2.0);
}

TEST(Distortion, GeneralModeCountsContraction) {
  const DistortionReport r = report_from_ratios({0.5, 2.0}, {1.0}, DistortionMode::kGeneral);
  EXPECT_EQ(r.worst, 4.0);
  EXPECT_DOUBLE_EQ(r.average, 2.0);
  const DistortionReport n = report_from_ratios({0.5, 2.0}, {1.0}, DistortionMode::kNonContractive);
  EXPECT_EQ(n.worst, 2.0);
  EXPECT_DOUBLE_EQ(n.average, 1.25);
}

TEST(Distortion, MomentsAreMonotoneInQ) {
  SeededRng rng(4);
  std::vector<double> ratios(500);
  for (double &r : ratios) r = 1.0 + 30.0 * rng.uniform() * rng.uniform();
  const DistortionReport r = report_from_ratios(ratios, {1, 1.5, 2, 3, 8, 20, kInf}, DistortionMode::kGeneral);
  for (std::size_t i = 1; i < r.lq.size(); ++i) EXPECT_LE(r.lq[i - 1].second, r.lq[i].second);
  EXPECT_EQ(r.lq.back().second, r.max_ratio);
}

TEST(Distortion, ClustersTreeIsExact) {
  const MetricSpace x = testing::c22();
  const RamseyResult res = ramsey_subspace(x, WeightFunction::unit(4), 2);
  const auto tree = [&](PointId a, PointId b) { return um_point_distance(res.tree, a, b); };
  const DistortionReport r = distortion_report(x, tree, subspace_pairs(res.s), {1, 2, kInf});
  EXPECT_EQ(r.worst, 1.0);
  for (auto [q, v] : r.lq) EXPECT_EQ(v, 1.0);
}

TEST(Distortion, SamplingUsesRequestedPairCount) {
  const MetricSpace x = testing::fixture({"graph", "30", "1"});
  const auto id = [&](PointId a, PointId b) { return 2 * x.dist(a, b); };
  const DistortionReport r =
      distortion_report(x, id, subspace_pairs(x.all()), {1}, DistortionMode::kGeneral, "all", {50, 3});
  EXPECT_EQ(r.pairs, 50u);
  EXPECT_EQ(r.average, 2.0);
}

TEST(Distortion, PairUniverses) {
  EXPECT_EQ(subspace_pairs(testing::ids({1, 4, 6})).size(), 3u);
  const auto cp = core_pairs(testing::ids({0, 2}), 4);
  // {0,1} {0,2} {0,3} {1,2} {2,3}
  EXPECT_EQ(cp.size(), 5u);
  EXPECT_TRUE(std::is_sorted(cp.begin(), cp.end()));
}

TEST(Partial, OrderStatistics) {
  EXPECT_EQ(partial_from_distortions({1, 1, 1}, 0.5).achieved, 1.0);
  const PartialReport r = partial_from_distortions({1, 1, 1, 1, 1, 100}, 1.0 / 6.0);
  EXPECT_EQ(r.achieved, 1.0);
  EXPECT_EQ(r.excluded, 1u);
  EXPECT_EQ(partial_from_distortions({1, 3, 2, 100}, 1e-9).achieved, 100.0);
  double last = kInf;
  for (double eps : {0.01, 0.1, 0.3, 0.6, 0.9}) {
    const double a = partial_from_distortions({5, 1, 4, 2, 9, 7, 3}, eps).achieved;
    EXPECT_LE(a, last);
    last = a;
  }
  EXPECT_THROW(partial_from_distortions({1}, 1.0), Error);
}

TEST(ScalingCurve, TwoPoints) {
  const MetricSpace x = testing::two_points();
  const WeightFunction w = WeightFunction::unit(2);
  const auto id = [&](PointId a, PointId b) { return x.dist(a, b); };
  const ScalingCurve c = scaling_curve(x, w, id, subspace_pairs(x.all()));
  ASSERT_EQ(c.records.size(), 1u);
  EXPECT_LE(c.records[0].threshold, 1.0);
  EXPECT_EQ(c.at(0.5), 1.0);
}

TEST(ScalingCurve, UniformTreeIsFlat) {
  const MetricSpace x = testing::fixture({"U", "8"});
  const RamseyResult res = ramsey_subspace(x, WeightFunction::unit(8), 2);
  const auto tree = [&](PointId a, PointId b) { return um_point_distance(res.tree, a, b); };
  const ScalingCurve c = scaling_curve(x, WeightFunction::unit(8), tree, subspace_pairs(res.s));
  for (const ScalingRecord &r : c.records) EXPECT_EQ(r.distortion, 1.0);
  for (double eps : {0.01, 0.3, 1.0}) EXPECT_EQ(c.at(eps), 1.0);
}

TEST(ScalingCurve, NearPairsHaveSmallerThresholds) {
  const MetricSpace x = testing::c22();
  EXPECT_LT(pair_threshold(x, WeightFunction::unit(4), 0, 1), pair_threshold(x, WeightFunction::unit(4), 0, 2));
  EXPECT_EQ(pair_threshold(x, WeightFunction::unit(4), 0, 1), 1.0);
  EXPECT_EQ(pair_threshold(x, WeightFunction::unit(4), 0, 2), 2.0);
}

// A pair is in G_eps when d >= max(r_{eps/2}(u), r_{eps/2}(v)); check the
// threshold against that rule evaluated with weight_radius directly.
TEST(ScalingCurve, ThresholdMatchesRadiusRule) {
  const MetricSpace x = testing::fixture({"planar", "25", "5"});
  const WeightFunction w = generate_integer_weights(25, 1, 5, 2);
  for (PointId u = 0; u < 25; u += 4) {
    for (PointId v = u + 1; v < 25; v += 3) {
      const double thr = pair_threshold(x, w, u, v);
      for (double eps : {0.02, 0.1, 0.3, 0.7, 1.0, 1.6}) {
        const bool in_g = x.dist(u, v) >= std::max(weight_radius(x, w, u, eps / 2), weight_radius(x, w, v, eps / 2));
        EXPECT_EQ(in_g, eps <= thr) << u << " " << v << " " << eps;
      }
    }
  }
}

TEST(LocalDistortion, Examples) {
  const MetricSpace x = testing::fixture({"graph", "12", "3"});
  const auto id = [&](PointId a, PointId b) { return x.dist(a, b); };
  const auto half = [&](PointId a, PointId b) { return x.dist(a, b) / 2; };
  for (std::size_t k = 1; k <= 12; ++k) EXPECT_EQ(local_distortion(x, id, x.all(), k), 1.0);
  EXPECT_EQ(local_distortion(x, half, x.all(), 12), 2.0);
  EXPECT_EQ(local_distortion(x, half, x.all(), 1), 1.0);
  const auto twice = [&](PointId a, PointId b) { return 2 * x.dist(a, b); };
  try {
    local_distortion(x, twice, x.all(), 3);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotNonExpansive);
  }
  EXPECT_THROW(local_distortion(x, id, x.all(), 13), Error);
}

TEST(BruteForce, Examples) {
  const MetricSpace c = testing::c22();
  EXPECT_EQ(brute_force_check(c, WeightFunction::unit(4), c.all(), c.all(), 5, 2), std::nullopt);
  const MetricSpace l = testing::l4();
  EXPECT_EQ(brute_force_check(l, WeightFunction::unit(4), l.all(), l.all(), 1.5, 2), std::nullopt);
}

TEST(BruteForce, RandomSixPointMetrics) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const MetricSpace x = testing::random_metric(6, seed);
    const WeightFunction w = generate_integer_weights(6, 1, 16, seed);
    const double diam = diameter(x, x.all());
    for (int t : {2, 3}) {
      for (double f : {0.3, 0.7, 1.0}) {
        const auto r = brute_force_check(x, w, x.all(), x.all(), f * diam / 2, t);
        EXPECT_EQ(r, std::nullopt) << "seed " << seed << ": " << r.value_or("");
      }
    }
    const auto restricted = brute_force_check(x, w, x.all(), testing::ids({1, 3, 4}), diam / 2, 2);
    EXPECT_EQ(restricted, std::nullopt) << seed;
  }
  EXPECT_THROW(brute_force_check(testing::fixture({"L", "9"}), WeightFunction::unit(9),
                                 Subspace::range(9), Subspace::range(9), 2, 2),
               Error);
}

}  // namespace
}  // namespace mramsey
