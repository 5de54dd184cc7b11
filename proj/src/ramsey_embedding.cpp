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

#include "mramsey/ramsey_embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mramsey/decomposition.hpp"
#include "mramsey/error.hpp"
#include "mramsey/format.hpp"

namespace mramsey {

namespace {

struct Task {
  Task(Subspace zz, Subspace cc, bool no_core = false)
      : z(std::move(zz)), c(std::move(cc)), coreless(no_core) {}
  Subspace z;
  Subspace c;
  bool coreless = false;
  bool split = false;
  std::size_t child[2] = {0, 0};
  double bsize = 0.0;  // restricted spherical weight bsize_C(Z)
  EmbeddingNodeInfo info;
  Subspace s;
  NodeId node = kNoNode;
};

}  // namespace

RamseyEmbedding build_ramsey_embedding(const MetricSpace &x, const WeightFunction &w,
                                       const Subspace &ground, const RamseyParams &params) {
  if (ground.empty()) throw Error(ErrorCode::kEmptySubspace, "empty ground set");
  if (w.size() != x.size()) throw Error(ErrorCode::kInvalidParameters, "weight count does not match the metric");
  const double total = w.total(ground);
  const double log_inv_delta =
      params.variant == RamseyVariant::kBasic ? 0.0 : std::log(1.0 / params.delta);

  std::vector<Task> tasks;
  tasks.push_back({ground, ground});
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    stack.pop_back();
    const Subspace z = tasks[id].z;
    Subspace c = set_intersection(tasks[id].c, z);
    bool coreless = tasks[id].coreless || c.empty();
    if (coreless) c = z;
    tasks[id].coreless = coreless;
    tasks[id].c = c;
    EmbeddingNodeInfo &info = tasks[id].info;
    info.ground_size = z.size();
    info.core_size = coreless ? 0 : c.size();
    info.coreless = coreless;
    tasks[id].bsize = spherical_weight(x, w, z, c);
    if (params.variant == RamseyVariant::kPartial && w.total(z) <= params.epsilon * total) {
      info.star = true;
      continue;
    }
    if (z.size() == 1) continue;
    int t = params.t;
    if (params.variant == RamseyVariant::kScaling) {
      info.level = std::max(std::log(total / tasks[id].bsize) / log_inv_delta, 1.0);
      t = scaling_t(*params.schedule, info.level);
    }
    const double delta = diameter(x, z) / 2.0;
    const double eta = 1.0 / (4.0 * t);
    const RamseyDecomposition d = decompose(x, w, z, c, delta, t);
    std::vector<PointId> r;
    for (PointId p : z)
      if (point_set_distance(x, p, d.p) <= eta * delta / 2.0) r.push_back(p);
    Subspace rs = Subspace::from_unsorted(std::move(r));
    Subspace rest = set_difference(z, rs);
    if (!is_subset(d.qbar, rest)) throw GuaranteeViolation("Qbar lies outside R", 1, 0);
    info.t = t;
    info.delta = delta;
    info.eta = eta;
    info.padding = d.realized_padding;
    tasks[id].split = true;
    const std::size_t pid = tasks.size();
    Task a(std::move(rs), d.p, coreless);
    Task b(std::move(rest), set_intersection(d.qbar, c), coreless);
    tasks[id].child[0] = pid;
    tasks[id].child[1] = pid + 1;
    tasks.push_back(std::move(a));
    tasks.push_back(std::move(b));
    stack.push_back(pid + 1);
    stack.push_back(pid);
  }

  HstBuilder builder;
  for (std::size_t k = tasks.size(); k-- > 0;) {
    Task &task = tasks[k];
    EmbeddingNodeInfo &info = task.info;
    if (task.split) {
      Task &a = tasks[task.child[0]];
      Task &b = tasks[task.child[1]];
      task.s = set_union(a.s, b.s);
      task.node = builder.add_internal(2.0 * info.delta, {a.node, b.node});
      // S(R) against Z \ R, S(Z \ R) against R
      info.sep_inner = set_distance(x, a.s, b.z);
      info.sep_outer = set_distance(x, b.s, a.z);
      const double bound = info.eta * info.delta / 2.0;
      require_le("eta*delta/2 <= d(S(R), Z\\R)", bound, info.sep_inner);
      require_le("eta*delta/2 <= d(S(Z\\R), R)", bound, info.sep_outer);
      a.s = Subspace();
      b.s = Subspace();
      a.z = Subspace();
      b.z = Subspace();
    } else {
      if (task.z.size() == 1) {
        task.node = builder.add_leaf(task.z[0]);
      } else {
        std::vector<NodeId> leaves;
        for (PointId p : task.z) leaves.push_back(builder.add_leaf(p));
        task.node = builder.add_internal(diameter(x, task.z), std::move(leaves));
      }
      task.s = task.coreless ? Subspace() : task.c;
    }
    const double wc = task.coreless ? 0.0 : w.total(task.c);
    switch (params.variant) {
      case RamseyVariant::kBasic: {
        info.invariant_lhs = w.total_pow(task.s, 1.0 - 1.0 / params.t);
        info.invariant_rhs = wc == 0.0 ? 0.0 : wc * std::pow(task.bsize, -1.0 / params.t);
        require_le_rel("w_C(Z) bsize_C(Z)^(-1/t) <= w^psi(S(Z))", info.invariant_rhs,
                       info.invariant_lhs);
        break;
      }
      case RamseyVariant::kPartial:
        info.invariant_lhs = w.total(task.s);
        info.invariant_rhs =
            wc == 0.0 ? 0.0
                      : wc * std::pow(std::ceil(task.bsize / (params.epsilon * total)),
                                      -1.0 / params.t);
        break;
      case RamseyVariant::kScaling: {
        if (!task.split) info.level = std::max(std::log(total / task.bsize) / log_inv_delta, 1.0);
        info.invariant_lhs = w.total(task.s);
        info.invariant_rhs =
            wc == 0.0 ? 0.0 : wc * std::pow(params.delta, params.schedule->tail_integral(info.level));
        break;
      }
    }
  }
  RamseyEmbedding e;
  e.ground = ground;
  e.core = std::move(tasks[0].s);
  e.tree = std::move(builder).finish(tasks[0].node);
  e.per_node.reserve(tasks.size());
  for (const Task &task : tasks) e.per_node.push_back(task.info);
  e.params = params;
  return e;
}

RamseyEmbedding ramsey_embed(const MetricSpace &x, const WeightFunction &w, int t) {
  if (t < 2) throw Error(ErrorCode::kInvalidParameters, "t must be an integer >= 2");
  RamseyParams p;
  p.t = t;
  return build_ramsey_embedding(x, w, x.all(), p);
}

RamseyEmbedding partial_ramsey_embed(const MetricSpace &x, const WeightFunction &w,
                                     double delta, double eps) {
  RamseyParams p;
  p.variant = RamseyVariant::kPartial;
  p.t = partial_t(delta, eps);
  p.delta = delta;
  p.epsilon = eps;
  return build_ramsey_embedding(x, w, x.all(), p);
}

RamseyEmbedding scaling_ramsey_embed(const MetricSpace &x, const WeightFunction &w,
                                     double delta, const ScalingSchedule &schedule) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw Error(ErrorCode::kInvalidFraction, "delta must lie in (0, 1)");
  }
  RamseyParams p;
  p.variant = RamseyVariant::kScaling;
  p.t = 0;
  p.delta = delta;
  p.schedule = schedule;
  return build_ramsey_embedding(x, w, x.all(), p);
}

double subspace_bound(const RamseyParams &params, double eps) {
  switch (params.variant) {
    case RamseyVariant::kBasic:
    case RamseyVariant::kPartial:
      return 8.0 * params.t;
    case RamseyVariant::kScaling: {
      const double e = std::min(eps, 1.0);
      const double level = std::log(2.0 / e) / std::log(1.0 / params.delta);
      return std::max(4.0, 8.0 * ceil_tolerant((*params.schedule)(level)));
    }
  }
  return 0.0;
}

double embedding_bound(const RamseyParams &params, double eps) {
  if (params.variant != RamseyVariant::kScaling) return 16.0 * params.t;
  const double e = std::min(eps, 1.0);
  const double level = std::log(2.0 / e) / std::log(1.0 / params.delta);
  return std::max(4.0, 16.0 * ceil_tolerant((*params.schedule)(level)));
}

}  // namespace mramsey
