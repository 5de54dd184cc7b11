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

// Data-parallel inner loops shared by every construction.
//
// Each kernel has a portable scalar reference and, on x86-64, an AVX2
// variant. The variants are bit-identical: weight sums use four striped
// accumulators combined as (a0 + a1) + (a2 + a3) followed by a sequential
// tail, in both implementations, and no FMA contraction is allowed.
// Reductions by max/min and the min-plus relaxation are exact anyway.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace mramsey::kernels {

enum class Isa { kScalar, kAvx2 };

struct KernelTable {
  Isa isa;

  // sum of wts[k] over k with row[ids[k]] <= radius
  double (*masked_weight_sum)(const double *row, const std::uint32_t *ids,
                              const double *wts, std::size_t m, double radius);

  // number of k with row[ids[k]] <= radius
  std::size_t (*count_within)(const double *row, const std::uint32_t *ids,
                              std::size_t m, double radius);

  // max / min of row[ids[k]]; -inf / +inf for m == 0
  double (*gather_max)(const double *row, const std::uint32_t *ids,
                       std::size_t m);
  double (*gather_min)(const double *row, const std::uint32_t *ids,
                       std::size_t m);

  // row_i[j] = min(row_i[j], d_ik + row_k[j]) for j < n
  void (*min_plus_relax)(double *row_i, const double *row_k, double d_ik,
                         std::size_t n);
};

const KernelTable &scalar_table() noexcept;
// nullptr when the build or the host lacks AVX2.
const KernelTable *avx2_table() noexcept;

// Table picked at first use: AVX2 when the CPU reports it, unless the
// MRAMSEY_ISA environment variable is "scalar".
const KernelTable &active() noexcept;

// Overrides the dispatch. Returns false if the requested ISA is unavailable.
bool force_isa(Isa isa) noexcept;

std::string_view isa_name(Isa isa) noexcept;

}  // namespace mramsey::kernels
