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
#include <functional>

#include "fixtures.hpp"
#include "mramsey/error.hpp"
#include "mramsey/multi_embedding.hpp"

namespace mramsey {
namespace {

// Minimum over every choice of images, by full enumeration.
double enumerate_min(const MultiEmbedding &me, const std::vector<PointId> &path) {
  double best = INFINITY;
  std::vector<NodeId> pick(path.size());
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == path.size()) {
      double len = 0.0;
      for (std::size_t k = 1; k < pick.size(); ++k) len += um_distance(me.tree, pick[k - 1], pick[k]);
      best = std::min(best, len);
      return;
    }
    for (NodeId leaf : me.images(path[i])) {
      pick[i] = leaf;
      go(i + 1);
    }
  };
  go(0);
  return best;
}

TEST(MultiEmbedding, SingletonAndTwoPoints) {
  const MetricSpace one = MetricSpace::from_matrix(1, {0});
  EXPECT_EQ(build_multi_embedding(one, WeightFunction::unit(1), 0.5).leaf_count(), 1u);
  const MetricSpace two = testing::two_points();
  const MultiEmbedding me = build_multi_embedding(two, WeightFunction::unit(2), 0.5);
  EXPECT_EQ(me.leaf_count(), 2u);
  EXPECT_EQ(me.tree.node(me.tree.root()).label, 1.0);
}

// The first split separates {0} (its half-ball core is {0, 1} and the
// shell rule stops before 1), so the tree is a chain rooted at 10 and every
// point keeps a single image. The pair (0, 1) then sits 10 apart in the
// tree, which is the worst path ratio.
TEST(MultiEmbedding, ClustersExample) {
  const MetricSpace x = testing::c22();
  const MultiEmbedding me = build_multi_embedding(x, WeightFunction::unit(4), 0.5);
  EXPECT_EQ(me.leaf_count(), 4u);
  EXPECT_LE(me.leaf_count(), 8u);
  EXPECT_EQ(me.tree.node(me.tree.root()).label, 10.0);
  for (PointId p = 0; p < 4; ++p) EXPECT_EQ(me.images(p).size(), 1u);
  const std::vector<PointId> path{0, 2, 1};
  EXPECT_EQ(min_image_path_length(me, path), 20.0);
  EXPECT_EQ(um_point_distance(me.tree, 0, 1), 10.0);
  EXPECT_EQ(um_point_distance(me.tree, 2, 3), 1.0);
  const PathDistortionReport rep = path_distortion_report(me, x, {200, 5, 3});
  EXPECT_EQ(rep.max_ratio, 10.0);
  EXPECT_GE(rep.min_ratio, 1.0);
}

TEST(MultiEmbedding, DegeneratePaths) {
  const MetricSpace x = testing::c22();
  const MultiEmbedding me = build_multi_embedding(x, WeightFunction::unit(4), 0.5);
  const std::vector<PointId> loop{3, 3};
  EXPECT_EQ(min_image_path_length(me, loop), 0.0);
  const std::vector<PointId> hop{1, 3};
  EXPECT_EQ(min_image_path_length(me, hop), um_point_distance(me.tree, 1, 3));
  EXPECT_THROW(min_image_path_length(me, std::vector<PointId>{}), Error);
  EXPECT_THROW(min_image_path_length(me, std::vector<PointId>{0, 9}), Error);
}

TEST(MultiEmbedding, UniformMetricIsExact) {
  const MetricSpace x = testing::fixture({"U", "9"});
  for (double eps : {0.25, 0.5, 1.0}) {
    const MultiEmbedding me = build_multi_embedding(x, WeightFunction::unit(9), eps);
    EXPECT_EQ(path_distortion_report(me, x, {100, 5, 1}).max_ratio, 1.0);
  }
}

TEST(MultiEmbedding, PathGuardrail) {
  const MetricSpace x = testing::fixture({"L", "8"});
  const MultiEmbedding me = build_multi_embedding(x, WeightFunction::unit(8), 0.5);
  const PathDistortionReport rep = path_distortion_report(me, x, {100, 5, 1});
  EXPECT_EQ(rep.paths, 100u);
  EXPECT_GE(rep.min_ratio, 1.0);
  EXPECT_LE(rep.max_ratio, 256.0 * 3.0 / 0.5);
  EXPECT_TRUE(rep.hops_noncontracting);
}

TEST(MultiEmbedding, DynamicProgramMatchesEnumeration) {
  const MetricSpace x = testing::fixture({"L", "64"});
  const MultiEmbedding me = build_multi_embedding(x, WeightFunction::unit(64), 0.5);
  ASSERT_GT(me.leaf_count(), 64u);  // some points are duplicated
  SeededRng rng(9);
  for (int k = 0; k < 200; ++k) {
    std::vector<PointId> path(2 + rng.below(4));
    for (PointId &p : path) p = static_cast<PointId>(rng.below(64));
    EXPECT_EQ(min_image_path_length(me, path), enumerate_min(me, path));
  }
}

TEST(MultiEmbedding, SplitAuditAndLeafBoundOnFixtures) {
  for (const auto &tokens : std::vector<std::vector<std::string>>{
           {"L", "64"}, {"planar", "64", "7"}, {"graph", "64", "7"}, {"C", "4", "8", "6"}}) {
    const MetricSpace x = testing::fixture(tokens);
    const double n = static_cast<double>(x.size());
    for (double eps : {0.25, 0.5, 1.0}) {
      const MultiEmbedding me = build_multi_embedding(x, WeightFunction::unit(x.size()), eps);
      EXPECT_LE(static_cast<double>(me.leaf_count()), std::ceil(std::pow(n, 1.0 + 1.0 / std::ceil(1.0 / eps))));
      EXPECT_FALSE(audit_multi_embedding(me));
      for (const MultiSplit &s : me.splits) {
        EXPECT_LE(2 * s.q_size, s.z_size);
        EXPECT_LE(s.diam_q, s.lambda / 4.0);
        EXPECT_GE(s.gap, eps / 64.0 * s.lambda);
      }
      for (PointId p = 0; p < x.size(); ++p) EXPECT_GE(me.images(p).size(), 1u);
    }
  }
}

}  // namespace
}  // namespace mramsey
