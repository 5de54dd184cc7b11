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

#include "mramsey/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mramsey/error.hpp"
#include "mramsey/format.hpp"

namespace mramsey {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_t(int t) {
  if (t < 2) throw Error(ErrorCode::kInvalidParameters, "t must be an integer >= 2");
}

}  // namespace

PointId select_center(const MetricSpace &x, const WeightFunction &w,
                      const Subspace &ground, const Subspace &core, double delta,
                      double *ratio) {
  const Subspace c = set_intersection(core, ground);
  if (c.empty()) throw Error(ErrorCode::kEmptyCore, "core does not meet the ground set");
  const WeightedView view(ground, w, c);
  PointId best = c[0];
  double best_ratio = kInf;
  for (PointId v : c) {
    const double outer = view.ball_weight(x, v, delta / 2.0);
    const double inner = view.ball_weight(x, v, delta / 4.0);
    const double r = outer / inner;
    if (r < best_ratio) {
      best_ratio = r;
      best = v;
    }
  }
  if (ratio) *ratio = best_ratio;
  return best;
}

RamseyDecomposition decompose_at(const MetricSpace &x, const WeightFunction &w,
                                 const Subspace &ground, const Subspace &core,
                                 PointId center, double delta, int t,
                                 DecomposeChecks checks) {
  check_t(t);
  if (ground.empty()) throw Error(ErrorCode::kEmptySubspace, "decomposition of an empty set");
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw Error(ErrorCode::kDeltaOutOfRange, "delta must be positive");
  }
  if (checks.delta_range) {
    const double diam = diameter(x, ground);
    if (!(delta <= diam / 2.0)) {
      throw Error(ErrorCode::kDeltaOutOfRange,
                  "delta=" + format_number(delta) + " exceeds diam/2=" + format_number(diam / 2.0));
    }
  }
  const Subspace c = set_intersection(core, ground);
  if (c.empty()) throw Error(ErrorCode::kEmptyCore, "core does not meet the ground set");
  const WeightedView view(ground, w, c);

  RamseyDecomposition d;
  d.center = center;
  d.t = t;
  d.delta = delta;
  d.radii.resize(static_cast<std::size_t>(t) + 1);
  d.shell_weights.resize(d.radii.size());
  for (int i = 0; i <= t; ++i) {
    d.radii[i] = delta * static_cast<double>(t + i) / (4.0 * t);
    d.shell_weights[i] = view.ball_weight(x, center, d.radii[i]);
  }
  if (!(d.shell_weights[0] > 0.0)) throw Error(ErrorCode::kEmptyCore, "center carries no core weight");
  d.center_ratio = view.ball_weight(x, center, delta / 2.0) / view.ball_weight(x, center, delta / 4.0);

  int best = 1;
  double best_ratio = kInf;
  for (int i = 1; i <= t; ++i) {
    const double r = d.shell_weights[i] / d.shell_weights[i - 1];
    if (r < best_ratio) {
      best_ratio = r;
      best = i;
    }
  }
  d.index = best;
  d.q = ball(x, ground, center, d.radii[best]);
  d.p = set_intersection(ball(x, ground, center, d.radii[best - 1]), c);
  d.qbar = set_difference(ground, d.q);
  d.realized_padding = d.qbar.empty() ? kInf : set_distance(x, d.p, d.qbar);
  check_decomposition(x, w, ground, core, d, checks.weight);
  return d;
}

RamseyDecomposition decompose(const MetricSpace &x, const WeightFunction &w,
                              const Subspace &ground, const Subspace &core,
                              double delta, int t, DecomposeChecks checks) {
  check_t(t);
  if (ground.empty()) throw Error(ErrorCode::kEmptySubspace, "decomposition of an empty set");
  if (checks.delta_range) {
    const double diam = diameter(x, ground);
    if (!(delta > 0.0 && delta <= diam / 2.0)) {
      throw Error(ErrorCode::kDeltaOutOfRange,
                  "delta=" + format_number(delta) + " outside (0, diam/2=" +
                      format_number(diam / 2.0) + "]");
    }
    checks.delta_range = false;  // already done
  }
  const PointId v = select_center(x, w, ground, core, delta);
  return decompose_at(x, w, ground, core, v, delta, t, checks);
}

void check_decomposition(const MetricSpace &x, const WeightFunction &w,
                         const Subspace &ground, const Subspace &core,
                         const RamseyDecomposition &d, bool weight) {
  if (!is_subset(d.p, d.q)) throw GuaranteeViolation("P is a subset of Q", 1, 0);
  if (!set_intersection(d.q, d.qbar).empty() || set_union(d.q, d.qbar) != ground) {
    throw GuaranteeViolation("Q and Qbar partition the ground set", 1, 0);
  }
  require_le("diam(Q) <= delta", diameter(x, d.q), d.delta);
  if (!d.qbar.empty()) {
    require_le("delta/(4t) <= d(P, Qbar)", d.delta / (4.0 * d.t), d.realized_padding);
  }
  const auto &sw = d.shell_weights;
  const double chosen = sw[d.index] / sw[d.index - 1];
  require_le_rel("w(Q_i)/w(Q_i-1) <= (w(Q_t)/w(Q_0))^(1/t)", chosen,
                 std::pow(sw[d.t] / sw[0], 1.0 / d.t));
  if (weight) {
    const Subspace c = set_intersection(core, ground);
    const double wp = w.total(d.p);
    const double wq = w.total(set_intersection(d.q, c));
    const double bx = spherical_weight(x, w, ground, c);
    const double bq = spherical_weight(x, w, d.q, c);
    require_le_rel("w(Q)(bsize(X)/bsize(Q))^(-1/t) <= w(P)",
                   wq * std::pow(bx / bq, -1.0 / d.t), wp);
  }
}

HalfDecomposition decompose_half(const MetricSpace &x, const WeightFunction &w,
                                 const Subspace &ground, double delta, int t) {
  check_t(t);
  if (ground.size() < 2) {
    throw Error(ErrorCode::kDeltaOutOfRange, "half decomposition needs two points");
  }
  const double diam = diameter(x, ground);
  if (!(delta > 0.0 && delta <= diam / 4.0)) {
    throw Error(ErrorCode::kDeltaOutOfRange,
                "delta=" + format_number(delta) + " outside (0, diam/4=" +
                    format_number(diam / 4.0) + "]");
  }
  const auto [u, v] = diameter_pair(x, ground);
  auto open_ball = [&](PointId e, double r) {
    std::vector<PointId> out;
    for (PointId z : ground)
      if (x.dist(e, z) < r) out.push_back(z);
    return Subspace::from_unsorted(std::move(out));
  };
  HalfDecomposition h;
  h.endpoint = u;
  if (2 * open_ball(u, diam / 2.0).size() > ground.size()) h.endpoint = v;
  // Centers stay deep enough inside the half ball that every shell, and so
  // Q, lies inside it. The shells are taken in the whole ground set, which
  // keeps P padded against all of ground \ Q, not only within the ball.
  h.restricted = open_ball(h.endpoint, diam / 2.0 - delta / 2.0);
  h.d = decompose(x, w, ground, h.restricted, delta, t);
  h.restricted_padding = h.d.realized_padding;
  require_le("2|Q| <= |X|", 2.0 * static_cast<double>(h.d.q.size()),
             static_cast<double>(ground.size()));
  return h;
}

// ---------------------------------------------------------------------------

PartitionBundle build_partition_bundle(const MetricSpace &x, const WeightFunction &w,
                                       double delta_hat, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorCode::kInvalidDelta, "delta must lie in (0, 1)");
  if (!(delta_hat > 0.0) || !std::isfinite(delta_hat)) {
    throw Error(ErrorCode::kInvalidDelta, "scale must be positive");
  }
  PartitionBundle out;
  out.delta_hat = delta_hat;
  out.delta = delta;
  Subspace alive = x.all();
  const double log_inv_delta = std::log2(1.0 / delta);
  while (!alive.empty()) {
    BundleRound round;
    round.alive = alive;
    std::vector<Subspace> pcores;  // P of each cluster before trimming
    Subspace rem = alive;
    while (!rem.empty()) {
      if (rem.size() == 1 || diameter(x, rem) < delta_hat) {
        BundleCluster c;
        c.members = rem;
        c.eta = 1.0 / 8.0;
        pcores.push_back(rem);
        round.clusters.push_back(std::move(c));
        break;
      }
      double ratio = 0.0;
      const PointId v = select_center(x, w, rem, rem, delta_hat, &ratio);
      const double eta = std::min(log_inv_delta / std::max(std::log2(ratio), 1.0), 1.0 / 8.0);
      const int t = std::max(2, static_cast<int>(std::floor(1.0 / (4.0 * eta))));
      const RamseyDecomposition d =
          decompose_at(x, w, rem, rem, v, delta_hat, t, {false, false});
      BundleCluster c;
      c.members = d.q;
      c.t = t;
      c.eta = 1.0 / (4.0 * t);
      pcores.push_back(d.p);
      round.clusters.push_back(std::move(c));
      rem = d.qbar;
    }
    Subspace removed;
    for (std::size_t i = 0; i < round.clusters.size(); ++i) {
      BundleCluster &c = round.clusters[i];
      const Subspace outside = set_difference(alive, c.members);
      std::vector<PointId> core;
      c.core_padding = kInf;
      for (PointId p : pcores[i]) {
        const double gap = outside.empty() ? kInf : point_set_distance(x, p, outside);
        if (gap >= c.eta * delta_hat) {
          core.push_back(p);
          c.core_padding = std::min(c.core_padding, gap);
        }
      }
      c.core = Subspace::from_unsorted(std::move(core));
      removed = set_union(removed, c.core);
    }
    if (removed.empty()) throw GuaranteeViolation("bundle round removes a core point", 0, 1);
    alive = set_difference(alive, removed);
    out.rounds.push_back(std::move(round));
  }
  return out;
}

std::optional<std::string> check_partition_bundle(const MetricSpace &x,
                                                  const PartitionBundle &b) {
  std::vector<bool> padded(x.size(), false);
  for (std::size_t r = 0; r < b.rounds.size(); ++r) {
    const BundleRound &round = b.rounds[r];
    Subspace seen;
    for (const BundleCluster &c : round.clusters) {
      const std::string where = "round " + std::to_string(r);
      if (!set_intersection(seen, c.members).empty()) return where + ": clusters overlap";
      seen = set_union(seen, c.members);
      if (!(diameter(x, c.members) <= b.delta_hat)) return where + ": cluster diameter exceeds the scale";
      if (!is_subset(c.core, c.members)) return where + ": core outside its cluster";
      const Subspace outside = set_difference(round.alive, c.members);
      for (PointId p : c.core) {
        if (!outside.empty() && !(point_set_distance(x, p, outside) >= c.eta * b.delta_hat)) {
          return where + ": core point " + std::to_string(p) + " is not padded";
        }
        padded[p] = true;
      }
    }
    if (seen != round.alive) return "round " + std::to_string(r) + ": clusters do not cover the alive set";
  }
  for (std::size_t i = 0; i < padded.size(); ++i) {
    if (!padded[i]) return "point " + std::to_string(i) + " is never padded";
  }
  return std::nullopt;
}

}  // namespace mramsey
