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

#include "mramsey/metric.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "mramsey/error.hpp"
#include "mramsey/format.hpp"
#include "mramsey/kernels.hpp"

namespace mramsey {

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::from_unsorted(std::vector<PointId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return Subspace(std::move(ids), true);
}

Subspace Subspace::range(std::size_t n) {
  std::vector<PointId> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<PointId>(i);
  return Subspace(std::move(ids), true);
}

bool Subspace::contains(PointId id) const noexcept {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

Subspace set_union(const Subspace &a, const Subspace &b) {
  std::vector<PointId> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return Subspace(std::move(out), true);
}

Subspace set_intersection(const Subspace &a, const Subspace &b) {
  std::vector<PointId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return Subspace(std::move(out), true);
}

Subspace set_difference(const Subspace &a, const Subspace &b) {
  std::vector<PointId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return Subspace(std::move(out), true);
}

bool is_subset(const Subspace &a, const Subspace &b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// ---------------------------------------------------------------------------
// WeightFunction

WeightFunction::WeightFunction(std::vector<double> values)
    : values_(std::move(values)) {
  unit_ = true;
  for (double v : values_) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidParameters,
                  "weights must be positive and finite, got " + format_number(v));
    }
    unit_ = unit_ && v == 1.0;
  }
}

WeightFunction WeightFunction::unit(std::size_t n) {
  return WeightFunction(std::vector<double>(n, 1.0));
}

double WeightFunction::total(const Subspace &z) const {
  double s = 0.0;
  for (PointId x : z) s += values_[x];
  return s;
}

double WeightFunction::total_pow(const Subspace &z, double psi) const {
  if (unit_) return static_cast<double>(z.size());
  double s = 0.0;
  for (PointId x : z) s += std::pow(values_[x], psi);
  return s;
}

// ---------------------------------------------------------------------------
// MetricSpace

MetricSpace MetricSpace::from_matrix(std::size_t n, std::vector<double> data,
                                     bool strict, Provenance prov) {
  if (data.size() != n * n) {
    throw Error(ErrorCode::kMalformedInput, "matrix has " +
                                                std::to_string(data.size()) +
                                                " entries, expected n*n");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = data[i * n + j];
      const std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
      if (!std::isfinite(v)) throw Error(ErrorCode::kMalformedInput, "non-finite entry at " + at);
      if (v < 0.0) throw Error(ErrorCode::kNegativeDistance, "negative entry at " + at);
      if (i == j && v != 0.0) throw Error(ErrorCode::kMalformedInput, "nonzero diagonal at " + at);
      if (i != j && v == 0.0) throw Error(ErrorCode::kZeroDistance, "zero distance at " + at);
      if (j > i && v != data[j * n + i]) {
        throw Error(ErrorCode::kAsymmetricInput,
                    "d" + at + "=" + format_number(v) + " but d(" +
                        std::to_string(j) + "," + std::to_string(i) +
                        ")=" + format_number(data[j * n + i]));
      }
    }
  }
  MetricSpace x;
  x.n_ = n;
  x.data_ = std::move(data);
  x.prov_ = std::move(prov);
  if (strict) {
    if (auto bad = x.find_triangle_violation()) {
      throw Error(ErrorCode::kTriangleViolation,
                  "d(" + std::to_string((*bad)[0]) + "," + std::to_string((*bad)[2]) +
                      ") exceeds the path through " + std::to_string((*bad)[1]));
    }
  }
  return x;
}

MetricSpace MetricSpace::from_points(const std::vector<std::vector<double>> &pts,
                                     double p, Provenance prov) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw Error(ErrorCode::kInvalidNorm, "norm exponent must be >= 1");
  }
  const std::size_t n = pts.size();
  const std::size_t dim = n ? pts[0].size() : 0;
  for (const auto &q : pts) {
    if (q.size() != dim) throw Error(ErrorCode::kMalformedInput, "ragged point cloud");
  }
  std::vector<double> data(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t c = 0; c < dim; ++c) {
        const double diff = std::abs(pts[i][c] - pts[j][c]);
        acc += p == 1.0 ? diff : p == 2.0 ? diff * diff : std::pow(diff, p);
      }
      const double d = p == 1.0 ? acc : p == 2.0 ? std::sqrt(acc) : std::pow(acc, 1.0 / p);
      data[i * n + j] = d;
      data[j * n + i] = d;
    }
  }
  if (prov.kind.empty()) prov.kind = "points";
  return from_matrix(n, std::move(data), false, std::move(prov));
}

MetricSpace MetricSpace::from_graph(std::size_t n, const std::vector<Edge> &edges,
                                    Provenance prov) {
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> d(n * n, inf);
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = 0.0;
  for (const Edge &e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kMalformedInput, "edge endpoint out of range");
    }
    if (e.w < 0.0) throw Error(ErrorCode::kNegativeDistance, "negative edge weight");
    if (!(e.w > 0.0) || !std::isfinite(e.w)) {
      throw Error(ErrorCode::kMalformedInput, "edge weights must be positive and finite");
    }
    if (e.u == e.v) continue;
    double &a = d[static_cast<std::size_t>(e.u) * n + e.v];
    double &b = d[static_cast<std::size_t>(e.v) * n + e.u];
    a = std::min(a, e.w);
    b = std::min(b, e.w);
  }
  const auto &k = kernels::active();
  for (std::size_t via = 0; via < n; ++via) {
    const double *row_via = d.data() + via * n;
    for (std::size_t i = 0; i < n; ++i) {
      const double d_iv = d[i * n + via];
      if (d_iv == inf || i == via) continue;
      k.min_plus_relax(d.data() + i * n, row_via, d_iv, n);
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = std::min(d[i * n + j], d[j * n + i]);
      if (v == inf) {
        throw Error(ErrorCode::kDisconnectedGraph,
                    "no path between " + std::to_string(i) + " and " + std::to_string(j));
      }
      d[i * n + j] = v;
      d[j * n + i] = v;
    }
  }
  if (prov.kind.empty()) prov.kind = "graph";
  return from_matrix(n, std::move(d), false, std::move(prov));
}

std::optional<std::array<PointId, 3>> MetricSpace::find_triangle_violation(
    double rel_slack) const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      const double dij = data_[i * n_ + j];
      for (std::size_t k = 0; k < n_; ++k) {
        const double bound = dij + data_[j * n_ + k];
        if (data_[i * n_ + k] > bound * (1.0 + rel_slack)) {
          return std::array<PointId, 3>{static_cast<PointId>(i),
                                        static_cast<PointId>(j),
                                        static_cast<PointId>(k)};
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Balls and radii

Subspace ball(const MetricSpace &x, PointId v, double r) {
  return ball(x, x.all(), v, r);
}

Subspace ball(const MetricSpace &x, const Subspace &within, PointId v, double r) {
  const double *row = x.row(v);
  std::vector<PointId> out;
  for (PointId u : within) {
    if (row[u] <= r) out.push_back(u);
  }
  return Subspace::from_unsorted(std::move(out));
}

WeightedView::WeightedView(const Subspace &z, const WeightFunction &w)
    : ids_(z.begin(), z.end()) {
  wts_.reserve(ids_.size());
  for (PointId id : ids_) {
    wts_.push_back(w(id));
    total_ += w(id);
  }
}

WeightedView::WeightedView(const Subspace &z, const WeightFunction &w,
                           const Subspace &c)
    : ids_(z.begin(), z.end()) {
  wts_.reserve(ids_.size());
  auto it = c.begin();
  for (PointId id : ids_) {
    while (it != c.end() && *it < id) ++it;
    const double v = (it != c.end() && *it == id) ? w(id) : 0.0;
    wts_.push_back(v);
    total_ += v;
  }
}

double WeightedView::ball_weight(const MetricSpace &x, PointId v, double r) const {
  return kernels::active().masked_weight_sum(x.row(v), ids_.data(), wts_.data(),
                                             ids_.size(), r);
}

double diameter(const MetricSpace &x, const Subspace &z) {
  if (z.empty()) throw Error(ErrorCode::kEmptySubspace, "diameter of an empty set");
  const auto &k = kernels::active();
  double best = 0.0;
  for (std::size_t a = 0; a < z.size(); ++a) {
    // only later members: d is symmetric
    best = std::max(best, k.gather_max(x.row(z[a]), z.data() + a, z.size() - a));
  }
  return best;
}

std::array<PointId, 2> diameter_pair(const MetricSpace &x, const Subspace &z) {
  if (z.size() < 2) throw Error(ErrorCode::kEmptySubspace, "diameter pair needs two points");
  const double diam = diameter(x, z);
  for (std::size_t a = 0; a < z.size(); ++a) {
    const double *row = x.row(z[a]);
    for (std::size_t b = a + 1; b < z.size(); ++b) {
      if (row[z[b]] == diam) return {z[a], z[b]};
    }
  }
  return {z[0], z[1]};  // unreachable
}

double aspect_ratio(const MetricSpace &x) {
  const std::size_t n = x.size();
  if (n < 2) return 1.0;
  double hi = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = x.dist(static_cast<PointId>(i), static_cast<PointId>(j));
      hi = std::max(hi, d);
      lo = std::min(lo, d);
    }
  }
  return hi / lo;
}

double point_set_distance(const MetricSpace &x, PointId a, const Subspace &b) {
  return kernels::active().gather_min(x.row(a), b.data(), b.size());
}

double set_distance(const MetricSpace &x, const Subspace &a, const Subspace &b) {
  double best = std::numeric_limits<double>::infinity();
  if (a.empty() || b.empty()) return best;
  const auto &k = kernels::active();
  for (PointId p : a) best = std::min(best, k.gather_min(x.row(p), b.data(), b.size()));
  return best;
}

double spherical_weight(const MetricSpace &x, const WeightFunction &w,
                        const Subspace &z) {
  return spherical_weight(x, w, z, z);
}

double spherical_weight(const MetricSpace &x, const WeightFunction &w,
                        const Subspace &z, const Subspace &c) {
  if (z.empty()) throw Error(ErrorCode::kEmptySubspace, "spherical weight of an empty set");
  const double radius = diameter(x, z) / 4.0;
  const WeightedView view(z, w, c);
  double best = 0.0;
  auto it = c.begin();
  for (PointId v : z) {
    while (it != c.end() && *it < v) ++it;
    if (it == c.end() || *it != v) continue;
    best = std::max(best, view.ball_weight(x, v, radius));
  }
  return best;
}

double knn_radius(const MetricSpace &x, PointId p, std::size_t k) {
  const std::size_t n = x.size();
  if (k < 1 || k > n) throw Error(ErrorCode::kKOutOfRange, "k must lie in [1, n]");
  std::vector<double> row(x.row(p), x.row(p) + n);
  std::nth_element(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(k - 1), row.end());
  return row[k - 1];
}

double weight_radius(const MetricSpace &x, const WeightFunction &w, PointId u,
                     double eps) {
  if (!(eps > 0.0 && eps <= 1.0)) {
    throw Error(ErrorCode::kInvalidFraction, "eps must lie in (0, 1]");
  }
  const std::size_t n = x.size();
  std::vector<PointId> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<PointId>(i);
  const double *row = x.row(u);
  std::sort(order.begin(), order.end(), [&](PointId a, PointId b) {
    return row[a] != row[b] ? row[a] < row[b] : a < b;
  });
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += w(static_cast<PointId>(i));
  const double target = eps * total;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += w(order[i]);
    // a closed ball takes every point at the same distance at once
    if (i + 1 < n && row[order[i + 1]] == row[order[i]]) continue;
    if (acc >= target) return row[order[i]];
  }
  return row[order[n - 1]];
}

// ---------------------------------------------------------------------------
// Fixtures

namespace {

std::size_t parse_size(const std::string &s) {
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception &) {
    throw Error(ErrorCode::kInvalidParameters, "expected an integer, got '" + s + "'");
  }
  if (pos != s.size() || v < 0) {
    throw Error(ErrorCode::kInvalidParameters, "expected a nonnegative integer, got '" + s + "'");
  }
  return static_cast<std::size_t>(v);
}

double parse_double(const std::string &s) {
  std::size_t pos = 0;
  double v = 0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception &) {
    throw Error(ErrorCode::kInvalidParameters, "expected a number, got '" + s + "'");
  }
  if (pos != s.size()) throw Error(ErrorCode::kInvalidParameters, "expected a number, got '" + s + "'");
  return v;
}

}  // namespace

FixtureSpec FixtureSpec::parse(const std::vector<std::string> &tokens) {
  if (tokens.empty()) throw Error(ErrorCode::kUnknownFixture, "empty fixture descriptor");
  FixtureSpec spec;
  const std::string &name = tokens[0];
  auto need = [&](std::size_t count) {
    if (tokens.size() != count) {
      throw Error(ErrorCode::kInvalidParameters,
                  "fixture '" + name + "' takes " + std::to_string(count - 1) + " arguments");
    }
  };
  if (name == "U" || name == "uniform") {
    need(2);
    spec.kind = FixtureKind::kUniform;
    spec.n = parse_size(tokens[1]);
  } else if (name == "L" || name == "path") {
    need(2);
    spec.kind = FixtureKind::kPath;
    spec.n = parse_size(tokens[1]);
  } else if (name == "C" || name == "clusters") {
    need(4);
    spec.kind = FixtureKind::kClusters;
    spec.clusters = parse_size(tokens[1]);
    spec.per_cluster = parse_size(tokens[2]);
    spec.separation = parse_double(tokens[3]);
    spec.n = spec.clusters * spec.per_cluster;
  } else if (name == "planar" || name == "graph") {
    need(3);
    spec.kind = name == "planar" ? FixtureKind::kPlanar : FixtureKind::kGraph;
    spec.n = parse_size(tokens[1]);
    spec.seed = parse_size(tokens[2]);
  } else {
    throw Error(ErrorCode::kUnknownFixture, "unknown fixture '" + name + "'");
  }
  return spec;
}

std::string FixtureSpec::describe() const {
  switch (kind) {
    case FixtureKind::kUniform: return "U " + std::to_string(n);
    case FixtureKind::kPath: return "L " + std::to_string(n);
    case FixtureKind::kClusters:
      return "C " + std::to_string(clusters) + " " + std::to_string(per_cluster) +
             " " + format_number(separation);
    case FixtureKind::kPlanar:
      return "planar " + std::to_string(n) + " " + std::to_string(seed.value_or(0));
    case FixtureKind::kGraph:
      return "graph " + std::to_string(n) + " " + std::to_string(seed.value_or(0));
  }
  return "?";
}

MetricSpace generate(const FixtureSpec &spec) {
  const std::size_t n = spec.n;
  if (n == 0) throw Error(ErrorCode::kInvalidParameters, "fixture needs at least one point");
  Provenance prov{"fixture", spec.describe()};
  std::vector<double> d(n * n, 0.0);
  switch (spec.kind) {
    case FixtureKind::kUniform:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d[i * n + j] = i == j ? 0.0 : 1.0;
      return MetricSpace::from_matrix(n, std::move(d), false, prov);
    case FixtureKind::kPath:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          d[i * n + j] = static_cast<double>(i > j ? i - j : j - i);
      return MetricSpace::from_matrix(n, std::move(d), false, prov);
    case FixtureKind::kClusters: {
      if (spec.clusters == 0 || spec.per_cluster == 0 || !(spec.separation >= 1.0)) {
        throw Error(ErrorCode::kInvalidParameters,
                    "clusters need k, m >= 1 and separation >= 1");
      }
      const std::size_t m = spec.per_cluster;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          d[i * n + j] = i == j ? 0.0 : (i / m == j / m ? 1.0 : spec.separation);
      return MetricSpace::from_matrix(n, std::move(d), false, prov);
    }
    case FixtureKind::kPlanar: {
      if (!spec.seed) throw Error(ErrorCode::kInvalidParameters, "planar fixture needs a seed");
      SeededRng rng(*spec.seed);
      std::vector<std::vector<double>> pts(n, std::vector<double>(2));
      for (auto &p : pts) {
        p[0] = rng.uniform();
        p[1] = rng.uniform();
      }
      return MetricSpace::from_points(pts, 2.0, prov);
    }
    case FixtureKind::kGraph: {
      if (!spec.seed) throw Error(ErrorCode::kInvalidParameters, "graph fixture needs a seed");
      // random recursive tree plus n extra chords, integer weights in [1, 10]
      SeededRng rng(*spec.seed);
      std::vector<Edge> edges;
      for (std::size_t i = 1; i < n; ++i) {
        const auto parent = static_cast<PointId>(rng.below(i));
        edges.push_back({static_cast<PointId>(i), parent, 1.0 + static_cast<double>(rng.below(10))});
      }
      for (std::size_t e = 0; e < n && n > 1; ++e) {
        const auto u = static_cast<PointId>(rng.below(n));
        const auto v = static_cast<PointId>(rng.below(n));
        const double w = 1.0 + static_cast<double>(rng.below(10));
        if (u != v) edges.push_back({u, v, w});
      }
      return MetricSpace::from_graph(n, edges, prov);
    }
  }
  throw Error(ErrorCode::kUnknownFixture, "unknown fixture kind");
}

WeightFunction generate_integer_weights(std::size_t n, int lo, int hi,
                                        std::uint64_t seed) {
  if (lo < 1 || hi < lo) throw Error(ErrorCode::kInvalidParameters, "weights need 1 <= lo <= hi");
  SeededRng rng(seed);
  std::vector<double> w(n);
  const auto span = static_cast<std::uint64_t>(hi - lo + 1);
  for (auto &v : w) v = static_cast<double>(lo + static_cast<int>(rng.below(span)));
  return WeightFunction(std::move(w));
}

// ---------------------------------------------------------------------------
// File formats

namespace {

std::ifstream open_in(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  return in;
}

}  // namespace

MetricSpace read_matrix_csv(std::istream &in, bool strict) {
  std::vector<double> data;
  std::size_t rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    std::stringstream ss(line);
    std::string cell;
    std::size_t cols = 0;
    while (std::getline(ss, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t");
      const auto e = cell.find_last_not_of(" \t");
      if (b == std::string::npos) throw Error(ErrorCode::kMalformedInput, "empty cell in row " + std::to_string(rows));
      data.push_back(parse_double(cell.substr(b, e - b + 1)));
      ++cols;
    }
    if (rows == 0 && cols == 0) throw Error(ErrorCode::kMalformedInput, "empty matrix row");
    ++rows;
    if (data.size() != rows * cols || (rows > 1 && data.size() % cols != 0)) {
      throw Error(ErrorCode::kMalformedInput, "ragged matrix row " + std::to_string(rows - 1));
    }
  }
  if (rows == 0) throw Error(ErrorCode::kMalformedInput, "empty matrix");
  if (data.size() != rows * rows) throw Error(ErrorCode::kMalformedInput, "matrix is not square");
  return MetricSpace::from_matrix(rows, std::move(data), strict, {"matrix", ""});
}

MetricSpace load_matrix_csv(const std::string &path, bool strict) {
  auto in = open_in(path);
  MetricSpace x = read_matrix_csv(in, strict);
  std::vector<double> copy(x.data().begin(), x.data().end());
  return MetricSpace::from_matrix(x.size(), std::move(copy), false, {"matrix", path});
}

void write_matrix_csv(std::ostream &out, const MetricSpace &x) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j) out << ',';
      out << format_number(x.dist(static_cast<PointId>(i), static_cast<PointId>(j)));
    }
    out << '\n';
  }
}

MetricSpace load_points_json(const std::string &path) {
  auto in = open_in(path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kMalformedInput, std::string("point cloud JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("points")) {
    throw Error(ErrorCode::kMalformedInput, "point cloud JSON needs a 'points' array");
  }
  std::vector<std::vector<double>> pts;
  try {
    pts = doc.at("points").get<std::vector<std::vector<double>>>();
  } catch (const nlohmann::json::exception &e) {
    throw Error(ErrorCode::kMalformedInput, std::string("point cloud JSON: ") + e.what());
  }
  const double p = doc.value("p", 2.0);
  return MetricSpace::from_points(pts, p, {"points", path});
}

MetricSpace load_graph_edges(const std::string &path) {
  auto in = open_in(path);
  std::vector<Edge> edges;
  std::size_t n = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::stringstream ss(line);
    long long u = 0, v = 0;
    double w = 0;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!(ss >> u >> v >> w) || u < 0 || v < 0) {
      throw Error(ErrorCode::kMalformedInput, "bad edge on line " + std::to_string(lineno));
    }
    edges.push_back({static_cast<PointId>(u), static_cast<PointId>(v), w});
    n = std::max<std::size_t>(n, static_cast<std::size_t>(std::max(u, v)) + 1);
  }
  return MetricSpace::from_graph(n, edges, {"graph", path});
}

WeightFunction load_weights(const std::string &path, std::size_t n) {
  auto in = open_in(path);
  std::vector<double> w;
  std::string line;
  while (std::getline(in, line)) {
    const auto b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) continue;
    const auto e = line.find_last_not_of(" \t\r");
    w.push_back(parse_double(line.substr(b, e - b + 1)));
  }
  if (w.size() != n) {
    throw Error(ErrorCode::kMalformedInput, "weights file has " + std::to_string(w.size()) +
                                                " entries, metric has " + std::to_string(n));
  }
  return WeightFunction(std::move(w));
}

void write_weights(std::ostream &out, const WeightFunction &w) {
  for (double v : w.values()) out << format_number(v) << '\n';
}

}  // namespace mramsey
