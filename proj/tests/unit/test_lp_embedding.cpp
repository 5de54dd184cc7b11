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
#include <sstream>

#include "fixtures.hpp"
#include "mramsey/error.hpp"
#include "mramsey/lp_embedding.hpp"

namespace mramsey {
namespace {

TEST(LpEmbed, TwoPoints) {
  const MetricSpace x = testing::two_points();
  const CoordinateEmbedding e = deterministic_lp_embed(x, 2, 0.5);
  ASSERT_EQ(e.scales.size(), 1u);
  EXPECT_EQ(e.scales[0].rounds, 1u);
  ASSERT_EQ(e.dim, 1u);
  EXPECT_EQ(e.coordinate(0, 0), 0.0);
  EXPECT_EQ(e.coordinate(1, 0), 1.0);
  EXPECT_EQ(e.distance(0, 1), 1.0);
  EXPECT_FALSE(check_lp_embedding(x, e));
}

TEST(LpEmbed, SinglePoint) {
  const MetricSpace x = MetricSpace::from_matrix(1, {0});
  const CoordinateEmbedding e = deterministic_lp_embed(x, 2, 0.5);
  EXPECT_EQ(e.dim, 0u);
  EXPECT_FALSE(check_lp_embedding(x, e));
}

// Four singleton clusters get codes 00, 01, 10, 11 and every point sits at
// padding 1, so coordinates are (b0, b1)/sqrt(2): pairs differing in one bit
// are 1/sqrt(2) apart, pairs differing in both bits are 1 apart.
TEST(LpEmbed, UniformFourPoints) {
  const MetricSpace x = testing::u4();
  const CoordinateEmbedding e = deterministic_lp_embed(x, 2, 0.5);
  ASSERT_EQ(e.dim, 2u);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_DOUBLE_EQ(e.distance(0, 1), h);
  EXPECT_DOUBLE_EQ(e.distance(0, 2), h);
  EXPECT_DOUBLE_EQ(e.distance(0, 3), 1.0);
  EXPECT_DOUBLE_EQ(e.distance(1, 2), 1.0);
  EXPECT_DOUBLE_EQ(e.distance(2, 3), h);
  EXPECT_FALSE(check_lp_embedding(x, e));
}

TEST(LpEmbed, RejectsBadParameters) {
  const MetricSpace x = testing::u4();
  EXPECT_THROW(deterministic_lp_embed(x, 0.5, 0.5), Error);
  EXPECT_THROW(deterministic_lp_embed(x, 2, 1.0), Error);
  EXPECT_THROW(deterministic_lp_embed(x, 2, 0.0), Error);
}

TEST(LpEmbed, LipschitzAndExpansionOnFixtures) {
  for (const auto &tokens : std::vector<std::vector<std::string>>{
           {"L", "30"}, {"planar", "40", "3"}, {"graph", "40", "3"}, {"C", "3", "4", "10"}}) {
    const MetricSpace x = testing::fixture(tokens);
    for (double p : {1.0, 2.0, 3.0}) {
      const CoordinateEmbedding e = deterministic_lp_embed(x, p, 0.5);
      EXPECT_FALSE(check_lp_embedding(x, e));
      const double cap = 2.0 * std::pow(static_cast<double>(e.scales.size()), 1.0 / p);
      for (PointId a = 0; a < x.size(); ++a) {
        for (PointId b = a + 1; b < x.size(); ++b) {
          const double d = x.dist(a, b);
          double acc = 0.0;
          for (std::size_t c = 0; c < e.dim; ++c) {
            const double diff = std::abs(e.raw(a, c) - e.raw(b, c));
            EXPECT_LE(diff, 2.0 * d * (1 + 1e-12));
            acc += std::pow(std::abs(e.coordinate(a, c) - e.coordinate(b, c)), p);
          }
          EXPECT_LE(std::pow(acc, 1.0 / p), cap * d * (1 + 1e-12));
          EXPECT_GT(e.distance(a, b), 0.0);
        }
      }
    }
  }
}

TEST(LpEmbed, CsvHasOneRowPerPoint) {
  const MetricSpace x = testing::fixture({"L", "5"});
  const CoordinateEmbedding e = deterministic_lp_embed(x, 2, 0.5);
  std::stringstream ss;
  write_coordinates_csv(ss, e);
  std::string line;
  int rows = 0;
  while (std::getline(ss, line)) {
    ++rows;
    EXPECT_EQ(static_cast<std::size_t>(std::count(line.begin(), line.end(), ',')) + 1, e.dim);
  }
  EXPECT_EQ(rows, 5);
  const Json j = to_json(e);
  EXPECT_EQ(j.at("dim").get<std::size_t>(), e.dim);
  EXPECT_EQ(j.at("scales").size(), e.scales.size());
}

}  // namespace
}  // namespace mramsey
