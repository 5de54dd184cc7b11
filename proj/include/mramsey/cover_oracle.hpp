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

// Ramsey covers and the constant-query-time distance oracle built on them.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mramsey/metric.hpp"
#include "mramsey/ramsey_embedding.hpp"
#include "mramsey/ultrametric.hpp"

namespace mramsey {

struct CoverLayer {
  HstTree tree;     // over X_i
  Subspace ground;  // X_i
  Subspace core;    // Z_i
};

struct RamseyCover {
  std::vector<CoverLayer> layers;
  std::vector<std::uint32_t> home;  // smallest i with x in Z_i
  RamseyParams params;

  // sum over layers of |X_i|
  std::size_t space() const;
};

// X_0 = X, X_{i+1} = X_i \ Z_i until nothing is left.
RamseyCover build_cover(const MetricSpace &x, const WeightFunction &w,
                        const RamseyParams &params);

struct OracleStats {
  std::size_t points = 0;
  std::size_t space = 0;  // sum |X_i|
  std::size_t layers = 0;
  std::vector<std::size_t> layer_sizes;
  std::vector<std::size_t> core_sizes;
};

struct StretchSummary {
  std::size_t pairs = 0;
  double max = 0.0;
  double min = 0.0;
  double mean = 0.0;
  double l2 = 0.0;
  // histogram[k] counts pairs with stretch in [2^k, 2^(k+1)); last bucket open
  std::vector<std::size_t> histogram;
};

class DistanceOracle {
 public:
  DistanceOracle() = default;
  static DistanceOracle build(const MetricSpace &x, const WeightFunction &w,
                              const RamseyParams &params);
  static DistanceOracle from_cover(RamseyCover cover);

  // Tree distance in layer min(home(x), home(y)); 0 for x == y. Adds the
  // number of table reads to *probes when given.
  double query(PointId x, PointId y, std::uint64_t *probes = nullptr) const;

  std::size_t size() const noexcept { return home_.size(); }
  std::uint32_t home(PointId p) const { return home_.at(p); }
  const HstTree &layer(std::size_t i) const { return trees_.at(i); }
  std::size_t layer_count() const noexcept { return trees_.size(); }
  const RamseyParams &params() const noexcept { return params_; }
  // Worst-case stretch promised for pairs the variant covers.
  double alpha() const { return embedding_bound(params_); }

  OracleStats stats() const;
  // Exact over all pairs against the source metric.
  StretchSummary stretch(const MetricSpace &x) const;

  // Directory layout: layer_<i>.json trees, table.bin (home and handle
  // table, little-endian u32), manifest.json.
  void save(const std::string &dir) const;
  static DistanceOracle load(const std::string &dir);

 private:
  std::vector<HstTree> trees_;
  std::vector<std::uint32_t> home_;
  std::vector<std::uint32_t> offsets_;  // handles of p: [offsets_[p], offsets_[p+1])
  std::vector<NodeId> handles_;         // i-th entry = leaf of p in layer i
  std::vector<std::size_t> core_sizes_;
  RamseyParams params_;
};

}  // namespace mramsey
