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
#include <cstring>
#include <limits>
#include <vector>

#include "mramsey/kernels.hpp"
#include "mramsey/metric.hpp"

namespace mramsey {
namespace {

using kernels::KernelTable;

struct Case {
  std::vector<double> row;
  std::vector<std::uint32_t> ids;
  std::vector<double> wts;
};

Case random_case(SeededRng &rng, std::size_t n, std::size_t m) {
  Case c;
  c.row.resize(n);
  for (double &v : c.row) v = rng.uniform() * 10.0;
  for (std::size_t k = 0; k < m; ++k) {
    c.ids.push_back(static_cast<std::uint32_t>(rng.below(n)));
    c.wts.push_back(rng.uniform() * 3.0);
  }
  return c;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

TEST(Kernels, ScalarMatchesPlainLoops) {
  const KernelTable &s = kernels::scalar_table();
  SeededRng rng(11);
  for (std::size_t m : {0u, 1u, 3u, 4u, 7u, 64u, 203u}) {
    Case c = random_case(rng, 97, m);
    for (double &w : c.wts) w = std::floor(w * 4);  // integer sums are exact in any order
    const double r = 5.0;
    double sum = 0.0, mx = -std::numeric_limits<double>::infinity(), mn = -mx;
    std::size_t count = 0;
    for (std::size_t k = 0; k < m; ++k) {
      const double v = c.row[c.ids[k]];
      if (v <= r) {
        sum += c.wts[k];
        ++count;
      }
      mx = std::max(mx, v);
      mn = std::min(mn, v);
    }
    EXPECT_EQ(s.masked_weight_sum(c.row.data(), c.ids.data(), c.wts.data(), m, r), sum);
    EXPECT_EQ(s.count_within(c.row.data(), c.ids.data(), m, r), count);
    EXPECT_EQ(s.gather_max(c.row.data(), c.ids.data(), m), mx);
    EXPECT_EQ(s.gather_min(c.row.data(), c.ids.data(), m), mn);
  }
}

TEST(Kernels, Avx2IsBitIdenticalToScalar) {
  const KernelTable *v = kernels::avx2_table();
  if (!v) GTEST_SKIP() << "no AVX2 on this host";
  const KernelTable &s = kernels::scalar_table();
  SeededRng rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng.below(300);
    const std::size_t m = rng.below(400);
    const Case c = random_case(rng, n, m);
    const double r = rng.uniform() * 11.0;
    ASSERT_TRUE(same_bits(s.masked_weight_sum(c.row.data(), c.ids.data(), c.wts.data(), m, r),
                          v->masked_weight_sum(c.row.data(), c.ids.data(), c.wts.data(), m, r)));
    ASSERT_EQ(s.count_within(c.row.data(), c.ids.data(), m, r),
              v->count_within(c.row.data(), c.ids.data(), m, r));
    ASSERT_TRUE(same_bits(s.gather_max(c.row.data(), c.ids.data(), m),
                          v->gather_max(c.row.data(), c.ids.data(), m)));
    ASSERT_TRUE(same_bits(s.gather_min(c.row.data(), c.ids.data(), m),
                          v->gather_min(c.row.data(), c.ids.data(), m)));
    std::vector<double> a = c.row, b = c.row;
    std::vector<double> other(n);
    for (double &o : other) o = rng.uniform() * 4.0;
    const double dik = rng.uniform();
    s.min_plus_relax(a.data(), other.data(), dik, n);
    v->min_plus_relax(b.data(), other.data(), dik, n);
    for (std::size_t j = 0; j < n; ++j) ASSERT_TRUE(same_bits(a[j], b[j]));
  }
}

TEST(Kernels, ConstructionsAgreeAcrossIsas) {
  if (!kernels::avx2_table()) GTEST_SKIP() << "no AVX2 on this host";
  std::vector<double> with_avx, with_scalar;
  for (auto isa : {kernels::Isa::kAvx2, kernels::Isa::kScalar}) {
    ASSERT_TRUE(kernels::force_isa(isa));
    const MetricSpace x = generate(FixtureSpec::parse({"graph", "60", "4"}));
    const WeightedView view(x.all(), WeightFunction({std::vector<double>(60, 0.3)}));
    auto &out = isa == kernels::Isa::kAvx2 ? with_avx : with_scalar;
    out.assign(x.data().begin(), x.data().end());
    for (PointId v = 0; v < 60; ++v) out.push_back(view.ball_weight(x, v, 5.0));
    out.push_back(diameter(x, x.all()));
  }
  kernels::force_isa(kernels::avx2_table() ? kernels::Isa::kAvx2 : kernels::Isa::kScalar);
  ASSERT_EQ(with_avx.size(), with_scalar.size());
  for (std::size_t i = 0; i < with_avx.size(); ++i) ASSERT_TRUE(same_bits(with_avx[i], with_scalar[i]));
}

}  // namespace
}  // namespace mramsey
