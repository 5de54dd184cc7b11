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

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "kernels_impl.hpp"
#include "mramsey/kernels.hpp"

namespace mramsey::kernels {

namespace {

const KernelTable kScalar{
    Isa::kScalar,          scalar::masked_weight_sum, scalar::count_within,
    scalar::gather_max,    scalar::gather_min,        scalar::min_plus_relax,
};

#if defined(MRAMSEY_HAVE_AVX2)
const KernelTable kAvx2{
    Isa::kAvx2,          avx2::masked_weight_sum, avx2::count_within,
    avx2::gather_max,    avx2::gather_min,        avx2::min_plus_relax,
};
#endif

bool host_has_avx2() noexcept {
#if defined(MRAMSEY_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable *pick_default() noexcept {
  const char *env = std::getenv("MRAMSEY_ISA");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return &kScalar;
  if (const KernelTable *t = avx2_table()) return t;
  return &kScalar;
}

std::atomic<const KernelTable *> g_active{nullptr};

}  // namespace

const KernelTable &scalar_table() noexcept { return kScalar; }

const KernelTable *avx2_table() noexcept {
#if defined(MRAMSEY_HAVE_AVX2)
  if (host_has_avx2()) return &kAvx2;
#endif
  return nullptr;
}

const KernelTable &active() noexcept {
  const KernelTable *t = g_active.load(std::memory_order_acquire);
  if (t == nullptr) {
    t = pick_default();
    g_active.store(t, std::memory_order_release);
  }
  return *t;
}

bool force_isa(Isa isa) noexcept {
  const KernelTable *t = isa == Isa::kScalar ? &kScalar : avx2_table();
  if (t == nullptr) return false;
  g_active.store(t, std::memory_order_release);
  return true;
}

std::string_view isa_name(Isa isa) noexcept {
  return isa == Isa::kAvx2 ? "avx2" : "scalar";
}

}  // namespace mramsey::kernels
