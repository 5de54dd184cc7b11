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

#include "mramsey/multi_embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mramsey/decomposition.hpp"
#include "mramsey/error.hpp"
#include "mramsey/format.hpp"

namespace mramsey {

namespace {

struct Task {
  Task(Subspace zz) : z(std::move(zz)) {}
  Subspace z;
  bool split = false;
  std::size_t child[2] = {0, 0};
  std::size_t split_index = 0;
  NodeId node = kNoNode;
  double leaf_weight = 0.0;
};

}  // namespace

MultiEmbedding build_multi_embedding(const MetricSpace &x, const WeightFunction &w,
                                     double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw Error(ErrorCode::kInvalidFraction, "epsilon must lie in (0, 1]");
  }
  if (x.size() == 0) throw Error(ErrorCode::kEmptySubspace, "empty metric space");
  MultiEmbedding me;
  me.epsilon = epsilon;
  me.t = static_cast<int>(ceil_tolerant(1.0 / epsilon));
  me.split_t = std::max(2, me.t);
  me.points = x.size();
  const double psi = 1.0 + 1.0 / me.split_t;

  std::vector<Task> tasks;
  tasks.push_back({x.all()});
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    stack.pop_back();
    const Subspace z = tasks[id].z;
    if (z.size() == 1) continue;
    const double lambda = diameter(x, z);
    const HalfDecomposition h = decompose_half(x, w, z, lambda / 4.0, me.split_t);
    MultiSplit s;
    s.z_size = z.size();
    s.q_size = h.d.q.size();
    s.p_size = h.d.p.size();
    s.lambda = lambda;
    s.diam_q = diameter(x, h.d.q);
    s.gap = h.d.realized_padding;
    const Subspace pbar = set_difference(z, h.d.p);
    s.overlap_gap = set_distance(x, h.d.q, pbar);
    tasks[id].split = true;
    tasks[id].split_index = me.splits.size();
    me.splits.push_back(s);
    const std::size_t cid = tasks.size();
    tasks[id].child[0] = cid;
    tasks[id].child[1] = cid + 1;
    tasks.push_back({h.d.q});
    tasks.push_back({pbar});
    stack.push_back(cid + 1);
    stack.push_back(cid);
  }

  HstBuilder builder;
  for (std::size_t k = tasks.size(); k-- > 0;) {
    Task &task = tasks[k];
    if (task.split) {
      const Task &a = tasks[task.child[0]];
      const Task &b = tasks[task.child[1]];
      MultiSplit &s = me.splits[task.split_index];
      task.node = builder.add_internal(s.lambda, {a.node, b.node});
      task.leaf_weight = a.leaf_weight + b.leaf_weight;
      s.leaf_weight = task.leaf_weight;
      s.leaf_bound = w.total(task.z) * std::pow(spherical_weight(x, w, task.z), 1.0 / me.split_t);
    } else {
      task.node = builder.add_leaf(task.z[0]);
      task.leaf_weight = std::pow(w(task.z[0]), psi);
    }
  }
  me.tree = std::move(builder).finish(tasks[0].node);
  return me;
}

double min_image_path_length(const MultiEmbedding &me, std::span<const PointId> path) {
  if (path.size() < 2) throw Error(ErrorCode::kEmptyPath, "a path needs at least two points");
  for (PointId p : path) {
    if (p >= me.points) throw Error(ErrorCode::kUnknownPoint, "point " + std::to_string(p) + " out of range");
  }
  auto prev_leaves = me.images(path[0]);
  std::vector<double> prev(prev_leaves.size(), 0.0);
  for (std::size_t j = 1; j < path.size(); ++j) {
    const auto cur_leaves = me.images(path[j]);
    std::vector<double> cur(cur_leaves.size(), std::numeric_limits<double>::infinity());
    for (std::size_t b = 0; b < cur_leaves.size(); ++b) {
      for (std::size_t a = 0; a < prev_leaves.size(); ++a) {
        cur[b] = std::min(cur[b], prev[a] + um_distance(me.tree, prev_leaves[a], cur_leaves[b]));
      }
    }
    prev_leaves = cur_leaves;
    prev = std::move(cur);
  }
  return *std::min_element(prev.begin(), prev.end());
}

std::optional<std::string> audit_multi_embedding(const MultiEmbedding &me) {
  for (std::size_t i = 0; i < me.splits.size(); ++i) {
    const MultiSplit &s = me.splits[i];
    const std::string where = "split " + std::to_string(i) + ": ";
    if (!(2 * s.q_size <= s.z_size)) {
      return where + "|Q|=" + std::to_string(s.q_size) + " > |Z|/2 with |Z|=" + std::to_string(s.z_size);
    }
    if (!(s.diam_q <= s.lambda / 4.0)) {
      return where + "diam(Q)=" + format_number(s.diam_q) + " > lambda/4=" + format_number(s.lambda / 4.0);
    }
    if (!(s.gap >= me.epsilon / 64.0 * s.lambda)) {
      return where + "gap=" + format_number(s.gap) + " < (eps/64) lambda=" +
             format_number(me.epsilon / 64.0 * s.lambda);
    }
  }
  return std::nullopt;
}

PathDistortionReport path_distortion_report(const MultiEmbedding &me, const MetricSpace &x,
                                            const PathSampler &sampler) {
  if (sampler.max_len < 2) throw Error(ErrorCode::kInvalidParameters, "paths need at least two points");
  if (x.size() != me.points) throw Error(ErrorCode::kInvalidParameters, "metric does not match the embedding");
  PathDistortionReport rep;
  rep.leaf_count = me.leaf_count();
  rep.audit_failure = audit_multi_embedding(me);
  if (x.size() < 2) return rep;
  SeededRng rng(sampler.seed);
  rep.min_ratio = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  std::vector<PointId> path;
  for (std::size_t k = 0; k < sampler.count; ++k) {
    const std::size_t len = 2 + rng.below(sampler.max_len - 1);
    path.clear();
    path.push_back(static_cast<PointId>(rng.below(x.size())));
    while (path.size() < len) {
      const auto p = static_cast<PointId>(rng.below(x.size()));
      if (p != path.back()) path.push_back(p);
    }
    double truth = 0.0;
    for (std::size_t j = 1; j < path.size(); ++j) truth += x.dist(path[j - 1], path[j]);
    const double dp = min_image_path_length(me, path);
    const double r = dp / truth;
    if (!(dp >= truth)) rep.hops_noncontracting = false;
    rep.ratios.push_back(r);
    rep.max_ratio = std::max(rep.max_ratio, r);
    rep.min_ratio = std::min(rep.min_ratio, r);
    sum += r;
  }
  rep.paths = sampler.count;
  rep.mean_ratio = rep.paths ? sum / static_cast<double>(rep.paths) : 0.0;
  if (!rep.paths) rep.min_ratio = 0.0;
  return rep;
}

}  // namespace mramsey
