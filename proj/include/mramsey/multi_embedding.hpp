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

// Multi-embeddings into ultrametrics: every point maps to a set of leaves,
// and paths are measured by their cheapest sequence of images.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mramsey/metric.hpp"
#include "mramsey/ultrametric.hpp"

namespace mramsey {

struct MultiSplit {
  std::size_t z_size = 0;
  std::size_t q_size = 0;
  std::size_t p_size = 0;
  double lambda = 0.0;   // diam(Z), the node label
  double diam_q = 0.0;
  double gap = 0.0;      // d(P, Z \ Q): the padded separation of the split
  double overlap_gap = 0.0;  // d(Q, Z \ P); 0 whenever Q \ P is duplicated
  double leaf_weight = 0.0;  // sum over leaves of U(Z) of w^(1+1/t)
  double leaf_bound = 0.0;   // w(Z) bsize(Z)^(1/t)
};

struct MultiEmbedding {
  HstTree tree;
  double epsilon = 0.0;
  int t = 0;             // ceil(1/epsilon)
  int split_t = 0;       // decomposition parameter, max(2, t)
  std::size_t points = 0;
  std::vector<MultiSplit> splits;  // discovery order

  std::span<const NodeId> images(PointId p) const { return tree.leaves_of(p); }
  std::size_t leaf_count() const { return tree.leaf_count(); }
};

MultiEmbedding build_multi_embedding(const MetricSpace &x, const WeightFunction &w,
                                     double epsilon);

// DP over image sets: the cheapest image sequence's tree length.
double min_image_path_length(const MultiEmbedding &me, std::span<const PointId> path);

// Checks |Q| <= |Z|/2, diam(Q) <= lambda/4 and gap >= (eps/64) lambda at
// every split; returns the first failure.
std::optional<std::string> audit_multi_embedding(const MultiEmbedding &me);

struct PathSampler {
  std::size_t count = 100;
  std::size_t max_len = 5;  // points per path, >= 2
  std::uint64_t seed = 1;
};

struct PathDistortionReport {
  std::size_t paths = 0;
  double max_ratio = 0.0;
  double min_ratio = 0.0;
  double mean_ratio = 0.0;
  std::vector<double> ratios;  // in sampling order
  bool hops_noncontracting = true;
  std::optional<std::string> audit_failure;
  std::size_t leaf_count = 0;
};

// Paths have 2..max_len points drawn uniformly, consecutive points distinct.
PathDistortionReport path_distortion_report(const MultiEmbedding &me, const MetricSpace &x,
                                            const PathSampler &sampler);

}  // namespace mramsey
