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

#include "mramsey/ramsey.hpp"

#include <algorithm>
#include <cmath>

#include "mramsey/decomposition.hpp"
#include "mramsey/error.hpp"
#include "mramsey/format.hpp"

namespace mramsey {

namespace {

void check_fraction(const char *what, double v) {
  if (!(v > 0.0 && v < 1.0)) {
    throw Error(ErrorCode::kInvalidFraction,
                std::string(what) + " must lie in (0, 1), got " + format_number(v));
  }
}

struct Task {
  Task(Subspace zz) : z(std::move(zz)) {}
  Subspace z;
  bool split = false;
  std::size_t child[2] = {0, 0};
  double bsize = 0.0;
  RamseyNodeInfo info;
  // filled bottom-up
  Subspace s;
  NodeId node = kNoNode;
};

RamseyResult build(const MetricSpace &x, const WeightFunction &w, RamseyParams params) {
  const std::size_t n = x.size();
  if (n == 0) throw Error(ErrorCode::kEmptySubspace, "empty metric space");
  if (w.size() != n) throw Error(ErrorCode::kInvalidParameters, "weight count does not match the metric");
  const double total = w.total(x.all());
  const double log_inv_delta = params.variant == RamseyVariant::kBasic ? 0.0 : std::log(1.0 / params.delta);

  std::vector<Task> tasks;
  tasks.push_back({x.all()});
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    stack.pop_back();
    Task &task = tasks[id];
    const Subspace z = task.z;
    task.info.ground_size = z.size();
    task.bsize = spherical_weight(x, w, z);
    if (params.variant == RamseyVariant::kPartial && w.total(z) <= params.epsilon * total) {
      task.info.star = true;
      continue;
    }
    if (z.size() == 1) continue;
    int t = params.t;
    if (params.variant == RamseyVariant::kScaling) {
      task.info.level = std::max(std::log(total / task.bsize) / log_inv_delta, 1.0);
      t = scaling_t(*params.schedule, task.info.level);
    }
    const double delta = diameter(x, z) / 2.0;
    const RamseyDecomposition d = decompose(x, w, z, z, delta, t);
    task.split = true;
    task.info.t = t;
    task.info.delta = delta;
    task.info.padding = d.realized_padding;
    const std::size_t pid = tasks.size();
    tasks.push_back({d.p});
    tasks.push_back({d.qbar});
    tasks[id].child[0] = pid;
    tasks[id].child[1] = pid + 1;
    stack.push_back(pid + 1);
    stack.push_back(pid);
  }

  HstBuilder builder;
  for (std::size_t k = tasks.size(); k-- > 0;) {
    Task &task = tasks[k];
    if (task.split) {
      Task &a = tasks[task.child[0]];
      Task &b = tasks[task.child[1]];
      task.s = set_union(a.s, b.s);
      task.node = builder.add_internal(diameter(x, task.s), {a.node, b.node});
      // children are no longer needed
      a.s = Subspace();
      b.s = Subspace();
    } else if (task.z.size() == 1) {
      task.s = task.z;
      task.node = builder.add_leaf(task.z[0]);
    } else {
      task.s = task.z;
      std::vector<NodeId> leaves;
      for (PointId p : task.z) leaves.push_back(builder.add_leaf(p));
      task.node = builder.add_internal(diameter(x, task.z), std::move(leaves));
    }
    const double wz = w.total(task.z);
    RamseyNodeInfo &info = task.info;
    switch (params.variant) {
      case RamseyVariant::kBasic: {
        const double psi = 1.0 - 1.0 / params.t;
        info.invariant_lhs = w.total_pow(task.s, psi);
        info.invariant_rhs = wz * std::pow(task.bsize, -1.0 / params.t);
        require_le_rel("w(Z) bsize(Z)^(-1/t) <= w^psi(S(Z))", info.invariant_rhs, info.invariant_lhs);
        break;
      }
      case RamseyVariant::kPartial:
        info.invariant_lhs = w.total(task.s);
        info.invariant_rhs =
            wz * std::pow(std::ceil(task.bsize / (params.epsilon * total)), -1.0 / params.t);
        break;
      case RamseyVariant::kScaling: {
        const double level = task.split || task.z.size() > 1
                                 ? info.level
                                 : std::max(std::log(total / task.bsize) / log_inv_delta, 1.0);
        info.level = level;
        info.invariant_lhs = w.total(task.s);
        info.invariant_rhs = wz * std::pow(params.delta, params.schedule->tail_integral(level));
        break;
      }
    }
  }

  RamseyResult r;
  r.s = std::move(tasks[0].s);
  r.tree = std::move(builder).finish(tasks[0].node);
  r.per_node.reserve(tasks.size());
  for (const Task &task : tasks) r.per_node.push_back(task.info);
  r.psi = achieved_psi(r.s, w);
  r.params = std::move(params);
  return r;
}

}  // namespace

int partial_t(double delta, double eps) {
  check_fraction("delta", delta);
  check_fraction("epsilon", eps);
  const double v = std::log(1.0 / eps) / std::log(1.0 / delta);
  return std::max(2, static_cast<int>(ceil_tolerant(v)));
}

int scaling_t(const ScalingSchedule &schedule, double level) {
  return std::max(2, static_cast<int>(ceil_tolerant(schedule(level))));
}

RamseyResult ramsey_subspace(const MetricSpace &x, const WeightFunction &w, int t) {
  if (t < 2) throw Error(ErrorCode::kInvalidParameters, "t must be an integer >= 2");
  RamseyParams p;
  p.variant = RamseyVariant::kBasic;
  p.t = t;
  return build(x, w, std::move(p));
}

RamseyResult partial_ramsey(const MetricSpace &x, const WeightFunction &w,
                            double delta, double eps) {
  RamseyParams p;
  p.variant = RamseyVariant::kPartial;
  p.t = partial_t(delta, eps);
  p.delta = delta;
  p.epsilon = eps;
  return build(x, w, std::move(p));
}

RamseyResult scaling_ramsey(const MetricSpace &x, const WeightFunction &w,
                            double delta, const ScalingSchedule &schedule) {
  check_fraction("delta", delta);
  RamseyParams p;
  p.variant = RamseyVariant::kScaling;
  p.t = 0;
  p.delta = delta;
  p.schedule = schedule;
  return build(x, w, std::move(p));
}

std::optional<CertificateViolation> verify_weighted_certificate(
    const Subspace &s, const WeightFunction &w, double psi) {
  double lhs = 0.0;
  for (PointId y : s) {
    if (y >= w.size()) return CertificateViolation{0.0, 0.0, "subspace id out of range"};
    lhs += std::pow(w(y), psi);
  }
  double total = 0.0;
  for (double v : w.values()) total += v;
  const double rhs = std::pow(total, psi);
  if (s.empty()) return CertificateViolation{lhs, rhs, "empty subspace"};
  if (!(rhs <= lhs)) {
    return CertificateViolation{lhs, rhs,
                                "w^psi(S)=" + format_number(lhs) + " < w(X)^psi=" + format_number(rhs)};
  }
  return std::nullopt;
}

double achieved_psi(const Subspace &s, const WeightFunction &w) {
  if (s.empty()) return 0.0;
  double total = 0.0;
  for (double v : w.values()) total += v;
  if (w.is_unit()) {
    if (s.size() >= w.size()) return 1.0;
    return std::log(static_cast<double>(s.size())) / std::log(total);
  }
  // sum over S of (w(y)/w(X))^psi is decreasing in psi
  auto ok = [&](double psi) {
    double acc = 0.0;
    for (PointId y : s) acc += std::pow(w(y) / total, psi);
    return acc >= 1.0;
  };
  if (ok(1.0)) return 1.0;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? lo : hi) = mid;
  }
  return lo;
}

}  // namespace mramsey
