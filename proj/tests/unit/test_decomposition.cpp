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
#include "mramsey/decomposition.hpp"
#include "mramsey/error.hpp"

namespace mramsey {
namespace {

using testing::ids;

const WeightFunction kUnit4 = WeightFunction::unit(4);

// Pairwise checks of the lemma's guarantees, written out independently.
void expect_lemma(const MetricSpace &x, const WeightFunction &w, const Subspace &ground,
                  const Subspace &core, const RamseyDecomposition &d) {
  const Subspace c = set_intersection(core, ground);
  EXPECT_EQ(set_union(d.q, d.qbar), ground);
  EXPECT_TRUE(set_intersection(d.q, d.qbar).empty());
  EXPECT_TRUE(is_subset(d.p, d.q));
  EXPECT_TRUE(is_subset(d.p, c));
  for (PointId a : d.q)
    for (PointId b : d.q) EXPECT_LE(x.dist(a, b), d.delta);
  for (PointId a : d.p)
    for (PointId b : d.qbar) EXPECT_GE(x.dist(a, b), d.delta / (4.0 * d.t));
  auto bsize = [&](const Subspace &z) {
    double diam = 0.0;
    for (PointId a : z)
      for (PointId b : z) diam = std::max(diam, x.dist(a, b));
    double best = 0.0;
    for (PointId v : z) {
      if (!c.contains(v)) continue;
      double s = 0.0;
      for (PointId u : z)
        if (c.contains(u) && x.dist(u, v) <= diam / 4.0) s += w(u);
      best = std::max(best, s);
    }
    return best;
  };
  double wq = 0.0, wp = 0.0;
  for (PointId q : d.q)
    if (c.contains(q)) wq += w(q);
  for (PointId p : d.p) wp += w(p);
  EXPECT_LE(wq * std::pow(bsize(ground) / bsize(d.q), -1.0 / d.t), wp * (1 + 1e-12));
}

TEST(Decompose, ClustersExample) {
  const MetricSpace x = testing::c22();
  const RamseyDecomposition d = decompose(x, kUnit4, x.all(), x.all(), 5, 2);
  EXPECT_EQ(d.center, 0u);
  EXPECT_EQ(d.q, ids({0, 1}));
  EXPECT_EQ(d.p, ids({0, 1}));
  EXPECT_EQ(d.qbar, ids({2, 3}));
  EXPECT_EQ(d.realized_padding, 10.0);
}

TEST(Decompose, PathExample) {
  const MetricSpace x = testing::l4();
  const RamseyDecomposition d = decompose(x, kUnit4, x.all(), x.all(), 1.5, 2);
  EXPECT_EQ(d.center, 0u);
  EXPECT_EQ(d.q, ids({0}));
  EXPECT_EQ(d.p, ids({0}));
  EXPECT_EQ(d.qbar, ids({1, 2, 3}));
  EXPECT_EQ(d.realized_padding, 1.0);
}

TEST(Decompose, RejectsDeltaOutsideRange) {
  const MetricSpace x = testing::l4();
  try {
    decompose(x, kUnit4, ids({2}), ids({2}), 0.5, 2);
    FAIL();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::kDeltaOutOfRange);
  }
  EXPECT_THROW(decompose(x, kUnit4, x.all(), x.all(), 1.6, 2), Error);
  EXPECT_THROW(decompose(x, kUnit4, x.all(), x.all(), 1.0, 1), Error);
  EXPECT_THROW(decompose(x, kUnit4, ids({0, 1}), ids({3}), 0.5, 2), Error);
}

TEST(Decompose, GuaranteesOnRandomMetrics) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    SeededRng rng(seed);
    const std::size_t n = 4 + rng.below(20);
    const MetricSpace x = testing::random_metric(n, seed);
    const WeightFunction w = generate_integer_weights(n, 1, 16, seed);
    std::vector<PointId> g, c;
    for (PointId p = 0; p < n; ++p) {
      if (rng.below(4)) g.push_back(p);
      if (rng.below(2)) c.push_back(p);
    }
    const Subspace ground = ids(g);
    Subspace core = set_intersection(ids(c), ground);
    if (ground.size() < 2) continue;
    if (core.empty()) core = Subspace::singleton(ground[0]);
    const double diam = diameter(x, ground);
    for (int t : {2, 3, 5}) {
      const double delta = diam / 2.0 * (0.2 + 0.8 * rng.uniform());
      const RamseyDecomposition d = decompose(x, w, ground, core, delta, t);
      expect_lemma(x, w, ground, core, d);
    }
  }
}

TEST(DecomposeHalf, Examples) {
  const MetricSpace two = testing::two_points();
  const HalfDecomposition a = decompose_half(two, WeightFunction::unit(2), two.all(), 0.25, 2);
  EXPECT_EQ(a.d.q, ids({0}));
  EXPECT_EQ(a.d.p, ids({0}));
  EXPECT_EQ(a.d.qbar, ids({1}));
  const MetricSpace u = testing::u4();
  const HalfDecomposition b = decompose_half(u, kUnit4, u.all(), 0.25, 2);
  EXPECT_EQ(b.d.q, ids({0}));
}

// Hand trace: endpoint 0 holds {0, 1} in its open diam/2 ball; centers are
// drawn from the points within 5 - 1.25 of it, i.e. {0, 1}. Both have ball
// ratio 2, so v* = 0; shells 0.625, 0.9375, 1.25 weigh 1, 1, 2; the first
// minimal ratio is i* = 1, so Q = P = {0}.
TEST(DecomposeHalf, ClustersExample) {
  const MetricSpace x = testing::c22();
  const HalfDecomposition h = decompose_half(x, kUnit4, x.all(), 2.5, 2);
  EXPECT_EQ(h.endpoint, 0u);
  EXPECT_EQ(h.restricted, ids({0, 1}));
  EXPECT_EQ(h.d.center, 0u);
  EXPECT_EQ(h.d.q, ids({0}));
  EXPECT_EQ(h.d.p, ids({0}));
  EXPECT_EQ(h.d.qbar, ids({1, 2, 3}));
}

TEST(DecomposeHalf, HalfSizeAndPaddingOnFixtures) {
  for (const auto &tokens : std::vector<std::vector<std::string>>{
           {"planar", "64", "7"}, {"graph", "64", "3"}, {"L", "33"}, {"C", "3", "5", "8"}}) {
    const MetricSpace x = testing::fixture(tokens);
    const WeightFunction w = WeightFunction::unit(x.size());
    const double diam = diameter(x, x.all());
    for (int t : {2, 4}) {
      const HalfDecomposition h = decompose_half(x, w, x.all(), diam / 4.0, t);
      EXPECT_LE(2 * h.d.q.size(), x.size());
      for (PointId a : h.d.p)
        for (PointId b : h.d.qbar) EXPECT_GE(x.dist(a, b), diam / (16.0 * t));
    }
  }
}

TEST(Bundle, UniformExample) {
  const MetricSpace u = testing::u4();
  const PartitionBundle b = build_partition_bundle(u, kUnit4, 0.5, 0.5);
  ASSERT_EQ(b.rounds.size(), 1u);
  ASSERT_EQ(b.rounds[0].clusters.size(), 4u);
  for (PointId p = 0; p < 4; ++p) {
    EXPECT_EQ(b.rounds[0].clusters[p].members, Subspace::singleton(p));
    EXPECT_EQ(b.rounds[0].clusters[p].core, Subspace::singleton(p));
  }
  EXPECT_FALSE(check_partition_bundle(u, b));
}

TEST(Bundle, Singleton) {
  const MetricSpace x = MetricSpace::from_matrix(1, {0});
  const PartitionBundle b = build_partition_bundle(x, WeightFunction::unit(1), 1.0, 0.5);
  ASSERT_EQ(b.rounds.size(), 1u);
  ASSERT_EQ(b.rounds[0].clusters.size(), 1u);
  EXPECT_FALSE(check_partition_bundle(x, b));
}

// At scale 2.5 the first carved ball around 0 has radius at most 1.25 and
// cannot reach 1, so the pair {0, 1} splits; {2, 3} is then the closing
// remainder (diameter 1 < 2.5). Cross distances keep every point padded.
TEST(Bundle, ClustersExample) {
  const MetricSpace x = testing::c22();
  const PartitionBundle b = build_partition_bundle(x, kUnit4, 2.5, 0.5);
  ASSERT_EQ(b.rounds.size(), 1u);
  const auto &cl = b.rounds[0].clusters;
  ASSERT_EQ(cl.size(), 3u);
  EXPECT_EQ(cl[0].members, ids({0}));
  EXPECT_EQ(cl[1].members, ids({1}));
  EXPECT_EQ(cl[2].members, ids({2, 3}));
  for (const auto &c : cl) EXPECT_EQ(c.core, c.members);
  EXPECT_FALSE(check_partition_bundle(x, b));
}

TEST(Bundle, InvariantsOnRandomMetrics) {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    const MetricSpace x = testing::random_metric(30, seed);
    const WeightFunction w = WeightFunction::unit(30);
    const double diam = diameter(x, x.all());
    for (double scale : {diam, diam / 2, diam / 5}) {
      for (double delta : {0.25, 0.5, 0.9}) {
        const PartitionBundle b = build_partition_bundle(x, w, scale, delta);
        EXPECT_FALSE(check_partition_bundle(x, b));
        EXPECT_LE(b.rounds.size(), std::ceil(2 * std::log(30.0) / delta) + 1);
        for (const auto &r : b.rounds)
          for (const auto &c : r.clusters) EXPECT_LE(diameter(x, c.members), scale);
      }
    }
  }
  EXPECT_THROW(build_partition_bundle(testing::u4(), kUnit4, 1.0, 1.0), Error);
  EXPECT_THROW(build_partition_bundle(testing::u4(), kUnit4, 0.0, 0.5), Error);
}

}  // namespace
}  // namespace mramsey
