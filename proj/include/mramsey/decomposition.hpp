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

// Ramsey decomposition: a ball Q around a low-growth center, split off from
// the rest of the ground set, with an inner shell P that is heavy and padded.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mramsey/metric.hpp"

namespace mramsey {

struct RamseyDecomposition {
  PointId center = 0;
  int index = 0;   // i* in 1..t
  int t = 0;
  double delta = 0.0;
  Subspace q;
  Subspace qbar;
  Subspace p;
  double realized_padding = 0.0;  // d(P, Qbar); +inf when Qbar is empty
  double center_ratio = 0.0;      // w_C(B(v*, delta/2)) / w_C(B(v*, delta/4))
  std::vector<double> radii;      // r_0..r_t
  std::vector<double> shell_weights;  // w_C(Q_0)..w_C(Q_t)
};

struct DecomposeChecks {
  bool delta_range = true;  // require 0 < delta <= diam(ground)/2
  bool weight = true;       // assert the spherical-weight inequality
};

// Center choice alone: the id-smallest member of core minimizing
// w_C(B(v, delta/2)) / w_C(B(v, delta/4)), balls taken in ground.
PointId select_center(const MetricSpace &x, const WeightFunction &w,
                      const Subspace &ground, const Subspace &core, double delta,
                      double *ratio = nullptr);

// Shells around a fixed center with radii delta*(t+i)/(4t).
RamseyDecomposition decompose_at(const MetricSpace &x, const WeightFunction &w,
                                 const Subspace &ground, const Subspace &core,
                                 PointId center, double delta, int t,
                                 DecomposeChecks checks = {});

// Full procedure: select_center then decompose_at. core = ground gives
// the unrestricted form.
RamseyDecomposition decompose(const MetricSpace &x, const WeightFunction &w,
                              const Subspace &ground, const Subspace &core,
                              double delta, int t, DecomposeChecks checks = {});

// Variant with |Q| <= |ground|/2; requires 0 < delta <= diam(ground)/4.
// Picks the diameter endpoint e whose open diam/2 ball holds at most half
// the points and runs the restricted lemma on the whole ground set with
// core {x : d(x, e) < diam/2 - delta/2}, so Q stays inside that ball.
struct HalfDecomposition {
  RamseyDecomposition d;
  Subspace restricted;  // the core used
  PointId endpoint = 0;
  double restricted_padding = 0.0;  // d(P, ground \ Q)
};
HalfDecomposition decompose_half(const MetricSpace &x, const WeightFunction &w,
                                 const Subspace &ground, double delta, int t);

// Runtime checks of the lemma's guarantees; throws GuaranteeViolation.
void check_decomposition(const MetricSpace &x, const WeightFunction &w,
                         const Subspace &ground, const Subspace &core,
                         const RamseyDecomposition &d, bool weight);

// ---------------------------------------------------------------------------
// Padded partition bundles.

struct BundleCluster {
  Subspace members;
  Subspace core;          // points of P at distance >= eta * delta_hat from the rest of the round
  double eta = 0.0;
  int t = 0;              // 0 for the closing remainder cluster
  double core_padding = 0.0;  // min over core of d(x, alive \ members); +inf if alone
};

struct BundleRound {
  Subspace alive;
  std::vector<BundleCluster> clusters;
};

struct PartitionBundle {
  double delta_hat = 0.0;
  double delta = 0.0;
  std::vector<BundleRound> rounds;
};

PartitionBundle build_partition_bundle(const MetricSpace &x, const WeightFunction &w,
                                       double delta_hat, double delta);

// Invariant audit; returns a description of the first failure.
std::optional<std::string> check_partition_bundle(const MetricSpace &x,
                                                  const PartitionBundle &b);

}  // namespace mramsey
