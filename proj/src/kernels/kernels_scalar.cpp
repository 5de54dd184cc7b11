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

#include <cmath>
#include <limits>

#include "kernels_impl.hpp"

namespace mramsey::kernels::scalar {

double masked_weight_sum(const double *row, const std::uint32_t *ids,
                         const double *wts, std::size_t m, double radius) {
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  std::size_t k = 0;
  for (; k + 4 <= m; k += 4) {
    for (std::size_t lane = 0; lane < 4; ++lane) {
      acc[lane] += row[ids[k + lane]] <= radius ? wts[k + lane] : 0.0;
    }
  }
  double total = (acc[0] + acc[1]) + (acc[2] + acc[3]);
  for (; k < m; ++k) {
    if (row[ids[k]] <= radius) total += wts[k];
  }
  return total;
}

std::size_t count_within(const double *row, const std::uint32_t *ids,
                         std::size_t m, double radius) {
  std::size_t count = 0;
  for (std::size_t k = 0; k < m; ++k) count += row[ids[k]] <= radius ? 1 : 0;
  return count;
}

double gather_max(const double *row, const std::uint32_t *ids, std::size_t m) {
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < m; ++k) best = std::max(best, row[ids[k]]);
  return best;
}

double gather_min(const double *row, const std::uint32_t *ids, std::size_t m) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < m; ++k) best = std::min(best, row[ids[k]]);
  return best;
}

void min_plus_relax(double *row_i, const double *row_k, double d_ik,
                    std::size_t n) {
  for (std::size_t j = 0; j < n; ++j) {
    const double via = d_ik + row_k[j];
    if (via < row_i[j]) row_i[j] = via;
  }
}

}  // namespace mramsey::kernels::scalar
