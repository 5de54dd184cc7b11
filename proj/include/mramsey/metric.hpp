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

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

namespace mramsey {

using PointId = std::uint32_t;

/// Sorted, duplicate-free set of point ids drawn from one MetricSpace.
///
/// Ascending order is the canonical form: every construction iterates
/// members in this order, which is what makes tie-breaking by smallest id
/// (and therefore the whole library) deterministic.
class Subspace {
 public:
  Subspace() = default;

  // Sorts and removes duplicates.
  static Subspace from_unsorted(std::vector<PointId> ids);
  static Subspace range(std::size_t n);
  static Subspace singleton(PointId id) { return Subspace(std::vector<PointId>{id}, true); }

  std::span<const PointId> ids() const noexcept { return ids_; }
  const PointId *data() const noexcept { return ids_.data(); }
  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  PointId operator[](std::size_t i) const noexcept { return ids_[i]; }
  auto begin() const noexcept { return ids_.begin(); }
  auto end() const noexcept { return ids_.end(); }
  bool contains(PointId id) const noexcept;

  bool operator==(const Subspace &other) const = default;

 private:
  Subspace(std::vector<PointId> sorted, bool /*trusted*/) : ids_(std::move(sorted)) {}
  std::vector<PointId> ids_;

  friend Subspace set_union(const Subspace &, const Subspace &);
  friend Subspace set_intersection(const Subspace &, const Subspace &);
  friend Subspace set_difference(const Subspace &, const Subspace &);
};

Subspace set_union(const Subspace &a, const Subspace &b);
Subspace set_intersection(const Subspace &a, const Subspace &b);
Subspace set_difference(const Subspace &a, const Subspace &b);
bool is_subset(const Subspace &a, const Subspace &b);

/// Positive per-point weights; the default is the constant function 1.
class WeightFunction {
 public:
  WeightFunction() = default;
  explicit WeightFunction(std::vector<double> values);
  static WeightFunction unit(std::size_t n);

  double operator()(PointId x) const noexcept { return values_[x]; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  bool is_unit() const noexcept { return unit_; }

  double total(const Subspace &z) const;
  // sum of w(x)^psi over z
  double total_pow(const Subspace &z, double psi) const;

 private:
  std::vector<double> values_;
  bool unit_ = false;
};

struct Provenance {
  std::string kind;        // "matrix", "points", "graph", "fixture"
  std::string descriptor;  // file name, fixture tokens, ...
};

struct Edge {
  PointId u;
  PointId v;
  double w;
};

/// Finite metric space backed by a dense row-major n x n matrix.
/// Immutable after construction.
class MetricSpace {
 public:
  MetricSpace() = default;

  // Validates symmetry, zero diagonal, positivity. The O(n^3) triangle
  // check only runs when strict is set.
  static MetricSpace from_matrix(std::size_t n, std::vector<double> data,
                                 bool strict = false, Provenance prov = {});
  // Minkowski p-norm over the coordinates, p >= 1.
  static MetricSpace from_points(const std::vector<std::vector<double>> &pts,
                                 double p, Provenance prov = {});
  // Shortest-path closure of a connected positively weighted graph.
  static MetricSpace from_graph(std::size_t n, const std::vector<Edge> &edges,
                                Provenance prov = {});

  std::size_t size() const noexcept { return n_; }
  double dist(PointId i, PointId j) const noexcept { return data_[static_cast<std::size_t>(i) * n_ + j]; }
  const double *row(PointId i) const noexcept { return data_.data() + static_cast<std::size_t>(i) * n_; }
  std::span<const double> data() const noexcept { return data_; }
  const Provenance &provenance() const noexcept { return prov_; }
  Subspace all() const { return Subspace::range(n_); }

  // First (i, j, k) in lexicographic order with d(i,k) > d(i,j) + d(j,k)
  // beyond a relative slack (absorbs rounding in computed point clouds).
  std::optional<std::array<PointId, 3>> find_triangle_violation(
      double rel_slack = 1e-12) const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
  Provenance prov_;
};

// ---------------------------------------------------------------------------
// Balls, weights and radii. Balls are closed: d(u, v) <= r, no tolerance.

// {u in X : d(u, v) <= r}
Subspace ball(const MetricSpace &x, PointId v, double r);
// {u in within : d(u, v) <= r}
Subspace ball(const MetricSpace &x, const Subspace &within, PointId v, double r);

/// Ids of a subset with aligned per-member weights, laid out for the
/// kernels. A restricted view zeroes the weight of members outside C,
/// which is how w_C is realized everywhere.
class WeightedView {
 public:
  WeightedView(const Subspace &z, const WeightFunction &w);
  WeightedView(const Subspace &z, const WeightFunction &w, const Subspace &c);

  std::span<const PointId> ids() const noexcept { return ids_; }
  std::span<const double> weights() const noexcept { return wts_; }
  std::size_t size() const noexcept { return ids_.size(); }
  double total() const noexcept { return total_; }

  // w(B(v, r) within the view)
  double ball_weight(const MetricSpace &x, PointId v, double r) const;

 private:
  std::vector<PointId> ids_;
  std::vector<double> wts_;
  double total_ = 0.0;
};

double diameter(const MetricSpace &x, const Subspace &z);
// Lexicographically smallest (u < v) realizing diam(z); z must have >= 2 points.
std::array<PointId, 2> diameter_pair(const MetricSpace &x, const Subspace &z);
// max pairwise / min positive pairwise distance; 1 for n < 2.
double aspect_ratio(const MetricSpace &x);
// min over a in A, b in B of d(a, b); +inf if either is empty.
double set_distance(const MetricSpace &x, const Subspace &a, const Subspace &b);
// min over b in B of d(a, b)
double point_set_distance(const MetricSpace &x, PointId a, const Subspace &b);

/// bsize(Z) = max over z in Z of w(B_Z(z, diam(Z)/4)).
double spherical_weight(const MetricSpace &x, const WeightFunction &w,
                        const Subspace &z);
/// Restricted form: max over z in Z n C of w_C(B_Z(z, diam(Z)/4)). Zero
/// when Z and C are disjoint.
double spherical_weight(const MetricSpace &x, const WeightFunction &w,
                        const Subspace &z, const Subspace &c);

// smallest r with |B(x, r)| >= k, 1 <= k <= n
double knn_radius(const MetricSpace &x, PointId p, std::size_t k);
// smallest r with w(B(u, r)) >= eps * w(X), 0 < eps <= 1
double weight_radius(const MetricSpace &x, const WeightFunction &w, PointId u,
                     double eps);

// ---------------------------------------------------------------------------
// Deterministic fixtures.

enum class FixtureKind { kUniform, kPath, kClusters, kPlanar, kGraph };

struct FixtureSpec {
  FixtureKind kind = FixtureKind::kUniform;
  std::size_t n = 0;        // U, L, planar, graph
  std::size_t clusters = 0; // C: k
  std::size_t per_cluster = 0;  // C: m
  double separation = 0.0;  // C: s
  std::optional<std::uint64_t> seed;

  // "U 4", "L 8", "C 2 2 10", "planar 64 7", "graph 64 7"
  static FixtureSpec parse(const std::vector<std::string> &tokens);
  std::string describe() const;
};

/// Uniform fixed-algorithm generator: std::mt19937_64 (its output sequence
/// is pinned by the standard) with the library's own mapping to doubles and
/// indices, so that results do not depend on the standard library vendor.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  // uniform in [0, 1) with 53 random bits
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // uniform in [0, bound); bound > 0
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

MetricSpace generate(const FixtureSpec &spec);
// Integer weights uniform in [lo, hi].
WeightFunction generate_integer_weights(std::size_t n, int lo, int hi,
                                        std::uint64_t seed);

// ---------------------------------------------------------------------------
// File formats.

// n rows of n comma-separated decimals
MetricSpace read_matrix_csv(std::istream &in, bool strict = false);
MetricSpace load_matrix_csv(const std::string &path, bool strict = false);
void write_matrix_csv(std::ostream &out, const MetricSpace &x);
// {"points": [[...], ...], "p": 2}
MetricSpace load_points_json(const std::string &path);
// "u v w" lines, 0-based ids
MetricSpace load_graph_edges(const std::string &path);
// one positive weight per line
WeightFunction load_weights(const std::string &path, std::size_t n);
void write_weights(std::ostream &out, const WeightFunction &w);

}  // namespace mramsey
