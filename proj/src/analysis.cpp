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

#include "mramsey/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mramsey/decomposition.hpp"
#include "mramsey/error.hpp"
#include "mramsey/format.hpp"

namespace mramsey {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double pair_distortion(double ratio, DistortionMode mode) {
  if (mode == DistortionMode::kNonContractive) return ratio;
  return ratio >= 1.0 ? ratio : 1.0 / ratio;
}

double pair_ratio(const MetricSpace &x, const MappedDistance &mapped, PointPair pr) {
  const double d = x.dist(pr.first, pr.second);
  if (!(d > 0.0)) {
    throw Error(ErrorCode::kZeroDistancePair,
                "d(" + std::to_string(pr.first) + "," + std::to_string(pr.second) + ") = 0");
  }
  return mapped(pr.first, pr.second) / d;
}

const char *mode_name(DistortionMode m) {
  return m == DistortionMode::kGeneral ? "general" : "non-contractive";
}

}  // namespace

std::vector<PointPair> subspace_pairs(const Subspace &s) {
  std::vector<PointPair> out;
  out.reserve(s.size() * (s.size() - (s.empty() ? 0 : 1)) / 2);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) out.emplace_back(s[i], s[j]);
  return out;
}

std::vector<PointPair> core_pairs(const Subspace &core, std::size_t n) {
  std::vector<bool> in_core(n, false);
  for (PointId c : core) in_core[c] = true;
  std::vector<PointPair> out;
  for (PointId c : core) {
    for (PointId y = 0; y < n; ++y) {
      if (y == c || (in_core[y] && y < c)) continue;
      out.emplace_back(std::min(c, y), std::max(c, y));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

DistortionReport report_from_ratios(const std::vector<double> &ratios, std::vector<double> qs,
                                    DistortionMode mode) {
  std::sort(qs.begin(), qs.end());
  DistortionReport r;
  r.mode = mode;
  r.pairs = ratios.size();
  if (ratios.empty()) {
    for (double q : qs) r.lq.emplace_back(q, 1.0);
    return r;
  }
  r.max_ratio = *std::max_element(ratios.begin(), ratios.end());
  r.min_ratio = *std::min_element(ratios.begin(), ratios.end());
  r.worst = mode == DistortionMode::kGeneral ? r.max_ratio / r.min_ratio : r.max_ratio;
  std::vector<double> dist(ratios.size());
  double peak = 0.0;
  for (std::size_t i = 0; i < ratios.size(); ++i) {
    dist[i] = pair_distortion(ratios[i], mode);
    peak = std::max(peak, dist[i]);
  }
  auto moment = [&](double q) {
    if (std::isinf(q)) return peak;
    double acc = 0.0;
    for (double v : dist) acc += std::pow(v, q);
    return std::pow(acc / static_cast<double>(dist.size()), 1.0 / q);
  };
  r.average = moment(1.0);
  for (double q : qs) {
    if (!(q >= 1.0)) throw Error(ErrorCode::kInvalidParameters, "q must be >= 1");
    r.lq.emplace_back(q, moment(q));
  }
  for (std::size_t i = 1; i < r.lq.size(); ++i) {
    require_le_rel("l_q distortion is nondecreasing in q", r.lq[i - 1].second, r.lq[i].second);
  }
  return r;
}

DistortionReport distortion_report(const MetricSpace &x, const MappedDistance &mapped,
                                   const std::vector<PointPair> &pairs, std::vector<double> qs,
                                   DistortionMode mode, std::string universe,
                                   SampleOptions sample) {
  std::vector<std::size_t> idx(pairs.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  if (sample.pairs > 0 && sample.pairs < pairs.size()) {
    SeededRng rng(sample.seed);
    for (std::size_t i = 0; i < sample.pairs; ++i) {
      std::swap(idx[i], idx[i + rng.below(idx.size() - i)]);
    }
    idx.resize(sample.pairs);
    std::sort(idx.begin(), idx.end());
  }
  std::vector<double> ratios;
  ratios.reserve(idx.size());
  for (std::size_t i : idx) ratios.push_back(pair_ratio(x, mapped, pairs[i]));
  DistortionReport r = report_from_ratios(ratios, std::move(qs), mode);
  r.universe = std::move(universe);
  return r;
}

PartialReport partial_from_distortions(std::vector<double> distortions, double eps) {
  if (!(eps > 0.0 && eps < 1.0)) throw Error(ErrorCode::kInvalidFraction, "eps must lie in (0, 1)");
  PartialReport r;
  r.epsilon = eps;
  r.pairs = distortions.size();
  if (distortions.empty()) return r;
  std::sort(distortions.begin(), distortions.end());
  const double n = static_cast<double>(distortions.size());
  const auto keep = std::max<std::size_t>(1, static_cast<std::size_t>(ceil_tolerant((1.0 - eps) * n)));
  r.achieved = distortions[keep - 1];
  r.excluded = distortions.size() - keep;
  return r;
}

PartialReport partial_report(const MetricSpace &x, const MappedDistance &mapped,
                             const std::vector<PointPair> &pairs, double eps, DistortionMode mode) {
  std::vector<double> d;
  d.reserve(pairs.size());
  for (PointPair pr : pairs) d.push_back(pair_distortion(pair_ratio(x, mapped, pr), mode));
  return partial_from_distortions(std::move(d), eps);
}

double pair_threshold(const MetricSpace &x, const WeightFunction &w, PointId u, PointId v) {
  const double d = x.dist(u, v);
  double bu = 0.0;
  double bv = 0.0;
  double total = 0.0;
  for (PointId z = 0; z < x.size(); ++z) {
    total += w(z);
    if (x.dist(u, z) <= d) bu += w(z);
    if (x.dist(v, z) <= d) bv += w(z);
  }
  return 2.0 * std::min(bu, bv) / total;
}

double ScalingCurve::at(double eps) const {
  double best = 1.0;
  // records are sorted by threshold, so G_eps is a suffix
  auto it = std::lower_bound(records.begin(), records.end(), eps,
                             [](const ScalingRecord &r, double e) { return r.threshold < e; });
  for (; it != records.end(); ++it) best = std::max(best, it->distortion);
  return best;
}

ScalingCurve scaling_curve(const MetricSpace &x, const WeightFunction &w,
                           const MappedDistance &mapped, const std::vector<PointPair> &pairs,
                           DistortionMode mode) {
  ScalingCurve c;
  c.records.reserve(pairs.size());
  for (PointPair pr : pairs) {
    ScalingRecord r;
    r.pair = pr;
    r.raw_threshold = pair_threshold(x, w, pr.first, pr.second);
    r.threshold = std::min(r.raw_threshold, 1.0);
    r.distortion = pair_distortion(pair_ratio(x, mapped, pr), mode);
    c.records.push_back(r);
  }
  std::stable_sort(c.records.begin(), c.records.end(),
                   [](const ScalingRecord &a, const ScalingRecord &b) { return a.threshold < b.threshold; });
  return c;
}

double local_distortion(const MetricSpace &x, const MappedDistance &mapped, const Subspace &core,
                        std::size_t k) {
  if (k < 1 || k > x.size()) throw Error(ErrorCode::kKOutOfRange, "k must lie in [1, n]");
  double alpha = 1.0;
  for (PointId c : core) {
    const double rk = knn_radius(x, c, k);
    for (PointId y = 0; y < x.size(); ++y) {
      if (y == c) continue;
      const double d = x.dist(c, y);
      const double m = mapped(c, y);
      if (!le_rel(m, d)) {
        throw Error(ErrorCode::kNotNonExpansive, "mapped(" + std::to_string(c) + "," +
                                                     std::to_string(y) + ") = " + format_number(m) +
                                                     " > d = " + format_number(d));
      }
      const double need = std::min(d, rk);
      if (need <= 0.0) continue;
      alpha = std::max(alpha, m > 0.0 ? need / m : kInf);
    }
  }
  return alpha;
}

// ---------------------------------------------------------------------------
// Exhaustive replay of the decomposition. Plain loops over ids throughout,
// sharing nothing with the module beyond the metric accessor.

std::optional<std::string> brute_force_check(const MetricSpace &x, const WeightFunction &w,
                                             const Subspace &ground, const Subspace &core,
                                             double delta, int t) {
  const std::size_t n = x.size();
  if (ground.size() > 8) throw Error(ErrorCode::kInvalidParameters, "brute force needs |ground| <= 8");
  std::vector<bool> in_g(n, false), in_c(n, false);
  for (PointId g : ground) in_g[g] = true;
  for (PointId c : core) in_c[c] = in_g[c];

  auto cw = [&](PointId v, double r) {  // w_C(B_ground(v, r))
    double s = 0.0;
    for (PointId z = 0; z < n; ++z)
      if (in_c[z] && x.dist(v, z) <= r) s += w(z);
    return s;
  };
  auto bsize = [&](const std::vector<bool> &set) {
    double diam = 0.0;
    for (PointId a = 0; a < n; ++a)
      for (PointId b = 0; b < n; ++b)
        if (set[a] && set[b]) diam = std::max(diam, x.dist(a, b));
    double best = 0.0;
    for (PointId v = 0; v < n; ++v) {
      if (!set[v] || !in_c[v]) continue;
      double s = 0.0;
      for (PointId z = 0; z < n; ++z)
        if (set[z] && in_c[z] && x.dist(v, z) <= diam / 4.0) s += w(z);
      best = std::max(best, s);
    }
    return best;
  };

  // center
  PointId vstar = 0;
  double vratio = kInf;
  std::vector<double> ratios(n, kInf);
  for (PointId v = 0; v < n; ++v) {
    if (!in_c[v]) continue;
    ratios[v] = cw(v, delta / 2.0) / cw(v, delta / 4.0);
    if (ratios[v] < vratio) {
      vratio = ratios[v];
      vstar = v;
    }
  }
  if (vratio == kInf) return "core does not meet the ground set";
  // shell index
  std::vector<double> radius(t + 1), sw(t + 1);
  for (int i = 0; i <= t; ++i) {
    radius[i] = delta * static_cast<double>(t + i) / (4.0 * t);
    sw[i] = cw(vstar, radius[i]);
  }
  int istar = 1;
  for (int i = 2; i <= t; ++i)
    if (sw[i] / sw[i - 1] < sw[istar] / sw[istar - 1]) istar = i;
  std::vector<bool> q(n, false), p(n, false);
  for (PointId z = 0; z < n; ++z) {
    q[z] = in_g[z] && x.dist(vstar, z) <= radius[istar];
    p[z] = in_c[z] && x.dist(vstar, z) <= radius[istar - 1];
  }

  RamseyDecomposition d;
  try {
    d = decompose(x, w, ground, core, delta, t);
  } catch (const Error &e) {
    return std::string("decomposition module failed: ") + e.what();
  }
  if (d.center != vstar) {
    return "center " + std::to_string(d.center) + " != brute force " + std::to_string(vstar);
  }
  if (d.index != istar) {
    return "index " + std::to_string(d.index) + " != brute force " + std::to_string(istar);
  }
  for (PointId z = 0; z < n; ++z) {
    if (d.q.contains(z) != bool(q[z])) return "Q differs at point " + std::to_string(z);
    if (d.p.contains(z) != bool(p[z])) return "P differs at point " + std::to_string(z);
    if (d.qbar.contains(z) != (in_g[z] && !q[z])) return "Qbar differs at point " + std::to_string(z);
  }

  // inequalities, pair by pair
  for (PointId v = 0; v < n; ++v) {
    if (in_c[v] && ratios[v] < vratio) return "center is not a minimizer";
  }
  for (int i = 1; i <= t; ++i) {
    if (sw[i] / sw[i - 1] < sw[istar] / sw[istar - 1]) return "index is not a minimizer";
  }
  if (!le_rel(sw[istar] / sw[istar - 1], std::pow(sw[t] / sw[0], 1.0 / t))) {
    return "chosen shell ratio exceeds the geometric mean";
  }
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = 0; b < n; ++b) {
      if (q[a] && q[b] && x.dist(a, b) > delta) {
        return "diam(Q) > delta at (" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
      if (p[a] && in_g[b] && !q[b] && x.dist(a, b) < delta / (4.0 * t)) {
        return "padding below delta/(4t) at (" + std::to_string(a) + "," + std::to_string(b) + ")";
      }
    }
  }
  double wq = 0.0, wp = 0.0;
  for (PointId z = 0; z < n; ++z) {
    if (q[z] && in_c[z]) wq += w(z);
    if (p[z]) wp += w(z);
  }
  const double lhs = wq * std::pow(bsize(in_g) / bsize(q), -1.0 / t);
  if (!le_rel(lhs, wp)) {
    return "weight inequality fails: " + format_number(lhs) + " > " + format_number(wp);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

Json to_json(const DistortionReport &r) {
  Json lq = Json::array();
  for (auto [q, v] : r.lq) {
    lq.push_back({{"q", std::isinf(q) ? Json("inf") : Json(q)}, {"value", v}});
  }
  return {{"universe", r.universe}, {"mode", mode_name(r.mode)}, {"pairs", r.pairs},
          {"max_ratio", r.max_ratio}, {"min_ratio", r.min_ratio}, {"worst", r.worst},
          {"average", r.average}, {"lq", std::move(lq)}};
}

Json to_json(const PartialReport &r) {
  return {{"epsilon", r.epsilon}, {"pairs", r.pairs}, {"excluded", r.excluded},
          {"achieved", r.achieved}};
}

Json to_json(const ScalingCurve &c) {
  Json recs = Json::array();
  for (const ScalingRecord &r : c.records) {
    recs.push_back({{"u", r.pair.first}, {"v", r.pair.second}, {"threshold", r.threshold},
                    {"raw_threshold", r.raw_threshold}, {"distortion", r.distortion}});
  }
  return {{"records", std::move(recs)}};
}

}  // namespace mramsey
