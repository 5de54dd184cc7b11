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

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mramsey/metric.hpp"
#include "mramsey/serialize.hpp"

namespace mramsey {

// Distance in the image of an embedding, indexed by original point ids.
using MappedDistance = std::function<double(PointId, PointId)>;
using PointPair = std::pair<PointId, PointId>;

enum class DistortionMode {
  kGeneral,         // per-pair max(ratio, 1/ratio)
  kNonContractive,  // per-pair ratio
};

// Unordered pairs of distinct points of s.
std::vector<PointPair> subspace_pairs(const Subspace &s);
// Pairs {x, y} with x in core and y anywhere in 0..n-1, each listed once.
std::vector<PointPair> core_pairs(const Subspace &core, std::size_t n);

struct SampleOptions {
  std::size_t pairs = 0;  // 0: exact over every pair
  std::uint64_t seed = 1;
};

struct DistortionReport {
  std::string universe;
  DistortionMode mode = DistortionMode::kGeneral;
  std::size_t pairs = 0;
  double max_ratio = 1.0;
  double min_ratio = 1.0;
  double worst = 1.0;
  double average = 1.0;
  std::vector<std::pair<double, double>> lq;  // (q, l_q distortion), q ascending
};

DistortionReport distortion_report(const MetricSpace &x, const MappedDistance &mapped,
                                   const std::vector<PointPair> &pairs,
                                   std::vector<double> qs = {1.0, 2.0},
                                   DistortionMode mode = DistortionMode::kGeneral,
                                   std::string universe = "pairs",
                                   SampleOptions sample = {});
// Same statistics from precomputed ratios mapped/d.
DistortionReport report_from_ratios(const std::vector<double> &ratios, std::vector<double> qs,
                                    DistortionMode mode);

struct PartialReport {
  double achieved = 1.0;   // distortion met by the best (1 - eps) share of pairs
  std::size_t excluded = 0;
  std::size_t pairs = 0;
  double epsilon = 0.0;
};

PartialReport partial_report(const MetricSpace &x, const MappedDistance &mapped,
                             const std::vector<PointPair> &pairs, double eps,
                             DistortionMode mode = DistortionMode::kGeneral);
PartialReport partial_from_distortions(std::vector<double> distortions, double eps);

struct ScalingRecord {
  PointPair pair;
  double raw_threshold = 0.0;  // 2 min(w(B(u, d)), w(B(v, d))) / w(X)
  double threshold = 0.0;      // raw clipped to 1
  double distortion = 1.0;
};

// A pair belongs to the coarse G_eps exactly when eps <= its threshold.
struct ScalingCurve {
  std::vector<ScalingRecord> records;  // ascending threshold
  // Max distortion over the pairs of G_eps; 1 when G_eps is empty.
  double at(double eps) const;
};

double pair_threshold(const MetricSpace &x, const WeightFunction &w, PointId u, PointId v);
ScalingCurve scaling_curve(const MetricSpace &x, const WeightFunction &w,
                           const MappedDistance &mapped, const std::vector<PointPair> &pairs,
                           DistortionMode mode = DistortionMode::kGeneral);

// Smallest alpha >= 1 with mapped(x, y) >= min(d(x, y), r_k(x)) / alpha for
// every x in core and y != x; r_k is the k-nearest-neighbour radius with the
// point itself counted first.
double local_distortion(const MetricSpace &x, const MappedDistance &mapped, const Subspace &core,
                        std::size_t k);

// Replays the decomposition selection by exhaustive enumeration and checks
// every inequality pair by pair. Requires |ground| <= 8.
std::optional<std::string> brute_force_check(const MetricSpace &x, const WeightFunction &w,
                                             const Subspace &ground, const Subspace &core,
                                             double delta, int t);

Json to_json(const DistortionReport &r);
Json to_json(const PartialReport &r);
Json to_json(const ScalingCurve &c);

}  // namespace mramsey
