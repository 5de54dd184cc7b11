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

// Large subspaces that embed into ultrametrics: the basic, partial and
// scaling recursions, and the weighted size certificate.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mramsey/metric.hpp"
#include "mramsey/schedule.hpp"
#include "mramsey/ultrametric.hpp"

namespace mramsey {

enum class RamseyVariant { kBasic, kPartial, kScaling };

struct RamseyParams {
  RamseyVariant variant = RamseyVariant::kBasic;
  int t = 2;             // basic: t; partial: t_p
  double delta = 0.0;    // partial / scaling
  double epsilon = 0.0;  // partial
  std::optional<ScalingSchedule> schedule;
};

// One entry per recursion node, in the order the recursion discovers them
// (parents before children).
struct RamseyNodeInfo {
  std::size_t ground_size = 0;
  int t = 0;            // 0 for leaves and stars
  double delta = 0.0;   // diam(Z)/2
  double padding = 0.0; // realized d(P, Qbar)
  bool star = false;
  double level = 0.0;   // scaling: l(Z)
  // per-node size induction: lhs >= rhs is the claim
  double invariant_lhs = 0.0;
  double invariant_rhs = 0.0;
};

struct RamseyResult {
  Subspace s;
  HstTree tree;
  std::vector<RamseyNodeInfo> per_node;
  RamseyParams params;
  double psi = 0.0;  // largest psi with w^psi(S) >= w(X)^psi
};

// t_p = max(2, ceil(log_{1/delta}(1/eps)))
int partial_t(double delta, double eps);
// max(2, ceil(schedule(level)))
int scaling_t(const ScalingSchedule &schedule, double level);

RamseyResult ramsey_subspace(const MetricSpace &x, const WeightFunction &w, int t);
RamseyResult partial_ramsey(const MetricSpace &x, const WeightFunction &w,
                            double delta, double eps);
RamseyResult scaling_ramsey(const MetricSpace &x, const WeightFunction &w,
                            double delta, const ScalingSchedule &schedule);

struct CertificateViolation {
  double lhs;  // w^psi(S)
  double rhs;  // w(X)^psi
  std::string detail;
};

// Checks sum over S of w(y)^psi >= (sum over X of w(x))^psi.
std::optional<CertificateViolation> verify_weighted_certificate(
    const Subspace &s, const WeightFunction &w, double psi);

// Largest psi in [0, 1] passing the certificate, by bisection (exact
// log|S|/log n for unit weights).
double achieved_psi(const Subspace &s, const WeightFunction &w);

}  // namespace mramsey
