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

// Compiled with -mavx2. Only reached through the dispatch table after a
// CPUID check.

#include <immintrin.h>

#include <bit>
#include <cmath>
#include <limits>

#include "kernels_impl.hpp"

namespace mramsey::kernels::avx2 {

namespace {

inline __m256d gather4(const double *row, const std::uint32_t *ids) {
  const __m128i idx =
      _mm_loadu_si128(reinterpret_cast<const __m128i *>(ids));
  return _mm256_i32gather_pd(row, idx, 8);
}

}  // namespace

double masked_weight_sum(const double *row, const std::uint32_t *ids,
                         const double *wts, std::size_t m, double radius) {
  const __m256d r = _mm256_set1_pd(radius);
  __m256d acc = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= m; k += 4) {
    const __m256d d = gather4(row, ids + k);
    const __m256d w = _mm256_loadu_pd(wts + k);
    const __m256d mask = _mm256_cmp_pd(d, r, _CMP_LE_OQ);
    acc = _mm256_add_pd(acc, _mm256_and_pd(mask, w));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; k < m; ++k) {
    if (row[ids[k]] <= radius) total += wts[k];
  }
  return total;
}

std::size_t count_within(const double *row, const std::uint32_t *ids,
                         std::size_t m, double radius) {
  const __m256d r = _mm256_set1_pd(radius);
  std::size_t count = 0;
  std::size_t k = 0;
  for (; k + 4 <= m; k += 4) {
    const __m256d d = gather4(row, ids + k);
    const int bits = _mm256_movemask_pd(_mm256_cmp_pd(d, r, _CMP_LE_OQ));
    count += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(bits)));
  }
  for (; k < m; ++k) count += row[ids[k]] <= radius ? 1 : 0;
  return count;
}

double gather_max(const double *row, const std::uint32_t *ids, std::size_t m) {
  __m256d best = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
  std::size_t k = 0;
  for (; k + 4 <= m; k += 4) best = _mm256_max_pd(best, gather4(row, ids + k));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double out = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
  for (; k < m; ++k) out = std::max(out, row[ids[k]]);
  return out;
}

double gather_min(const double *row, const std::uint32_t *ids, std::size_t m) {
  __m256d best = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  std::size_t k = 0;
  for (; k + 4 <= m; k += 4) best = _mm256_min_pd(best, gather4(row, ids + k));
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double out = std::min(std::min(lanes[0], lanes[1]), std::min(lanes[2], lanes[3]));
  for (; k < m; ++k) out = std::min(out, row[ids[k]]);
  return out;
}

void min_plus_relax(double *row_i, const double *row_k, double d_ik,
                    std::size_t n) {
  const __m256d dik = _mm256_set1_pd(d_ik);
  std::size_t j = 0;
  for (; j + 4 <= n; j += 4) {
    const __m256d via = _mm256_add_pd(dik, _mm256_loadu_pd(row_k + j));
    const __m256d cur = _mm256_loadu_pd(row_i + j);
    _mm256_storeu_pd(row_i + j, _mm256_min_pd(via, cur));
  }
  for (; j < n; ++j) {
    const double via = d_ik + row_k[j];
    if (via < row_i[j]) row_i[j] = via;
  }
}

}  // namespace mramsey::kernels::avx2
