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
#include <filesystem>
#include <fstream>

#include "fixtures.hpp"
#include "mramsey/cover_oracle.hpp"
#include "mramsey/error.hpp"

namespace mramsey {
namespace {

RamseyParams basic(int t) {
  RamseyParams p;
  p.t = t;
  return p;
}

TEST(Cover, ClustersExample) {
  const MetricSpace x = testing::c22();
  const RamseyCover c = build_cover(x, WeightFunction::unit(4), basic(2));
  EXPECT_EQ(c.layers.size(), 1u);
  EXPECT_EQ(c.layers[0].core, x.all());
  EXPECT_EQ(c.space(), 4u);
}

TEST(Cover, Singleton) {
  const MetricSpace x = MetricSpace::from_matrix(1, {0});
  const RamseyCover c = build_cover(x, WeightFunction::unit(1), basic(2));
  EXPECT_EQ(c.layers.size(), 1u);
  EXPECT_EQ(c.space(), 1u);
}

TEST(Cover, LayersShrinkAndCoverEveryPoint) {
  for (const auto &tokens : std::vector<std::vector<std::string>>{
           {"L", "8"}, {"L", "64"}, {"planar", "80", "1"}, {"graph", "80", "2"}}) {
    const MetricSpace x = testing::fixture(tokens);
    const std::size_t n = x.size();
    for (int t : {2, 3}) {
      const RamseyCover c = build_cover(x, WeightFunction::unit(n), basic(t));
      EXPECT_LE(static_cast<double>(c.space()), 2.0 * std::pow(n, 1.0 + 1.0 / t));
      EXPECT_LE(c.layers.size(), n);
      std::vector<int> homes(n, 0);
      Subspace remaining = x.all();
      for (std::size_t i = 0; i < c.layers.size(); ++i) {
        const CoverLayer &l = c.layers[i];
        EXPECT_EQ(l.ground, remaining);
        EXPECT_FALSE(l.core.empty());
        if (i > 0) {
          EXPECT_LT(l.ground.size(), c.layers[i - 1].ground.size());
        }
        for (PointId p : l.core) {
          ++homes[p];
          EXPECT_EQ(c.home[p], i);
        }
        remaining = set_difference(remaining, l.core);
      }
      EXPECT_TRUE(remaining.empty());
      for (int h : homes) EXPECT_EQ(h, 1);
    }
  }
}

TEST(Oracle, ClustersQueries) {
  const MetricSpace x = testing::c22();
  const DistanceOracle o = DistanceOracle::build(x, WeightFunction::unit(4), basic(2));
  EXPECT_EQ(o.query(0, 2), 10.0);
  EXPECT_EQ(o.query(0, 1), 1.0);
  for (PointId p = 0; p < 4; ++p) EXPECT_EQ(o.query(p, p), 0.0);
  EXPECT_THROW(o.query(0, 4), Error);
}

TEST(Oracle, PathQueriesWithinStretch) {
  const MetricSpace x = testing::fixture({"L", "8"});
  const DistanceOracle o = DistanceOracle::build(x, WeightFunction::unit(8), basic(2));
  EXPECT_LE(o.stats().layers, 8u);
  int pairs = 0;
  for (PointId a = 0; a < 8; ++a) {
    for (PointId b = a + 1; b < 8; ++b) {
      const double r = o.query(a, b) / x.dist(a, b);
      EXPECT_GE(r, 1.0);
      EXPECT_LE(r, 32.0);
      ++pairs;
    }
  }
  EXPECT_EQ(pairs, 28);
}

TEST(Oracle, StretchSummaryMatchesQueries) {
  const MetricSpace x = testing::fixture({"planar", "50", "3"});
  const DistanceOracle o = DistanceOracle::build(x, WeightFunction::unit(50), basic(3));
  const StretchSummary s = o.stretch(x);
  double mx = 0.0, sum = 0.0;
  for (PointId a = 0; a < 50; ++a) {
    for (PointId b = a + 1; b < 50; ++b) {
      const double r = o.query(a, b) / x.dist(a, b);
      mx = std::max(mx, r);
      sum += r;
    }
  }
  EXPECT_EQ(s.pairs, 1225u);
  EXPECT_EQ(s.max, mx);
  EXPECT_NEAR(s.mean, sum / 1225, 1e-12);
  EXPECT_LE(s.max, 48.0);
  EXPECT_GE(s.min, 1.0);
}

TEST(Oracle, ProbeCountDoesNotGrowWithN) {
  std::vector<std::uint64_t> counts;
  for (const char *n : {"16", "128", "400"}) {
    const MetricSpace x = testing::fixture({"graph", n, "1"});
    const DistanceOracle o = DistanceOracle::build(x, WeightFunction::unit(x.size()), basic(2));
    std::uint64_t most = 0, least = ~0ull;
    for (PointId a = 0; a < x.size(); a += 3) {
      std::uint64_t p = 0;
      o.query(a, static_cast<PointId>(x.size() - 1 - a), &p);
      if (a == x.size() - 1 - a) continue;
      most = std::max(most, p);
      least = std::min(least, p);
    }
    EXPECT_EQ(most, least);
    counts.push_back(most);
  }
  EXPECT_EQ(counts[0], counts[1]);
  EXPECT_EQ(counts[1], counts[2]);
}

TEST(Oracle, SaveLoadRoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "mramsey_oracle_test";
  std::filesystem::remove_all(dir);
  const MetricSpace x = testing::fixture({"graph", "60", "5"});
  const DistanceOracle o = DistanceOracle::build(x, WeightFunction::unit(60), basic(2));
  o.save(dir.string());
  const DistanceOracle back = DistanceOracle::load(dir.string());
  ASSERT_EQ(back.size(), 60u);
  EXPECT_EQ(back.layer_count(), o.layer_count());
  for (PointId a = 0; a < 60; ++a)
    for (PointId b = 0; b < 60; ++b) ASSERT_EQ(back.query(a, b), o.query(a, b));

  // flip a byte of the magic number
  {
    std::fstream f(dir / "table.bin", std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(0);
    f.put('X');
  }
  EXPECT_THROW(DistanceOracle::load(dir.string()), Error);
  std::filesystem::remove_all(dir);
}

TEST(Oracle, ScalingVariantIsNonContracting) {
  const MetricSpace x = testing::fixture({"planar", "60", "8"});
  RamseyParams p;
  p.variant = RamseyVariant::kScaling;
  p.delta = 0.5;
  p.t = 0;
  p.schedule = ScalingSchedule::square();
  const DistanceOracle o = DistanceOracle::build(x, WeightFunction::unit(60), p);
  EXPECT_GE(o.stretch(x).min, 1.0);
  EXPECT_LE(o.stretch(x).mean, 8.0 * std::ceil(ScalingSchedule::square()(2.0)));
}

}  // namespace
}  // namespace mramsey
