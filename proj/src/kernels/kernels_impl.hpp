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

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>

namespace mramsey::kernels {

namespace scalar {
double masked_weight_sum(const double *row, const std::uint32_t *ids,
                         const double *wts, std::size_t m, double radius);
std::size_t count_within(const double *row, const std::uint32_t *ids,
                         std::size_t m, double radius);
double gather_max(const double *row, const std::uint32_t *ids, std::size_t m);
double gather_min(const double *row, const std::uint32_t *ids, std::size_t m);
void min_plus_relax(double *row_i, const double *row_k, double d_ik,
                    std::size_t n);
}  // namespace scalar

#if defined(MRAMSEY_HAVE_AVX2)
namespace avx2 {
double masked_weight_sum(const double *row, const std::uint32_t *ids,
                         const double *wts, std::size_t m, double radius);
std::size_t count_within(const double *row, const std::uint32_t *ids,
                         std::size_t m, double radius);
double gather_max(const double *row, const std::uint32_t *ids, std::size_t m);
double gather_min(const double *row, const std::uint32_t *ids, std::size_t m);
void min_plus_relax(double *row_i, const double *row_k, double d_ik,
                    std::size_t n);
}  // namespace avx2
#endif

}  // namespace mramsey::kernels
