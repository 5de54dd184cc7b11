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

#include "mramsey/lp_embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "mramsey/error.hpp"
#include "mramsey/format.hpp"

namespace mramsey {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

int code_length(std::size_t clusters) {
  int bits = 0;
  while ((std::size_t{1} << bits) < clusters) ++bits;
  return bits;
}

}  // namespace

double CoordinateEmbedding::distance(PointId x, PointId y) const {
  const double *a = row(x);
  const double *b = row(y);
  double acc = 0.0;
  for (std::size_t c = 0; c < dim; ++c) acc += std::pow(std::abs(a[c] - b[c]), p);
  return std::pow(acc, 1.0 / p);
}

CoordinateEmbedding deterministic_lp_embed(const MetricSpace &x, double p, double delta) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw Error(ErrorCode::kInvalidNorm, "p must be >= 1");
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorCode::kInvalidDelta, "delta must lie in (0, 1)");
  CoordinateEmbedding e;
  e.n = x.size();
  e.p = p;
  e.delta = delta;
  if (e.n < 2) return e;

  const double diam = diameter(x, x.all());
  const int top = static_cast<int>(ceil_tolerant(std::log2(aspect_ratio(x))));
  const WeightFunction unit = WeightFunction::unit(e.n);
  // columns[c][x] before normalization
  std::vector<std::vector<double>> columns;
  for (int j = 0; j <= top; ++j) {
    ScaleBlock block;
    block.scale = j;
    block.delta_hat = std::ldexp(diam, -j);
    const PartitionBundle bundle = build_partition_bundle(x, unit, block.delta_hat, delta);
    block.rounds = bundle.rounds.size();
    const std::size_t first = columns.size();
    for (std::size_t r = 0; r < bundle.rounds.size(); ++r) {
      const BundleRound &round = bundle.rounds[r];
      const int bits = code_length(round.clusters.size());
      block.max_bits = std::max(block.max_bits, bits);
      // padding value and codeword of every alive point
      std::vector<double> pad(e.n, 0.0);
      std::vector<std::size_t> code(e.n, 0);
      for (std::size_t k = 0; k < round.clusters.size(); ++k) {
        const Subspace &members = round.clusters[k].members;
        const Subspace outside = set_difference(x.all(), members);
        for (PointId v : members) {
          const double g = outside.empty() ? kInf : point_set_distance(x, v, outside);
          pad[v] = std::min(g, block.delta_hat);
          code[v] = k;
        }
      }
      for (int b = 0; b < bits; ++b) {
        std::vector<double> col(e.n, 0.0);
        for (PointId v : round.alive) {
          if ((code[v] >> b) & 1u) col[v] = pad[v];
        }
        columns.push_back(std::move(col));
        e.info.push_back({j, r, b, 1.0});
      }
    }
    block.coordinates = columns.size() - first;
    if (block.coordinates > 0) {
      block.normalization = std::pow(static_cast<double>(block.coordinates), -1.0 / p);
      for (std::size_t c = first; c < columns.size(); ++c) e.info[c].normalization = block.normalization;
    }
    e.scales.push_back(block);
  }
  e.dim = columns.size();
  e.coords.assign(e.n * e.dim, 0.0);
  for (std::size_t c = 0; c < e.dim; ++c) {
    for (std::size_t v = 0; v < e.n; ++v) e.coords[v * e.dim + c] = columns[c][v] * e.info[c].normalization;
  }
  return e;
}

std::optional<std::string> check_lp_embedding(const MetricSpace &x, const CoordinateEmbedding &e) {
  const std::size_t n = e.n;
  if (n != x.size()) return "embedding size does not match the metric";
  for (double c : e.coords) {
    if (!std::isfinite(c)) return "non-finite coordinate";
  }
  if (n >= 2) {
    std::size_t max_rounds = 0;
    for (const ScaleBlock &b : e.scales) max_rounds = std::max(max_rounds, b.rounds);
    const std::size_t bound = e.scales.size() * max_rounds * static_cast<std::size_t>(code_length(n));
    if (e.dim > bound) return "dimension " + std::to_string(e.dim) + " exceeds " + std::to_string(bound);
  }
  const double expansion = 2.0 * std::pow(static_cast<double>(e.scales.size()), 1.0 / e.p);
  for (PointId a = 0; a < n; ++a) {
    for (PointId b = a + 1; b < n; ++b) {
      const double d = x.dist(a, b);
      for (std::size_t c = 0; c < e.dim; ++c) {
        const double diff = std::abs(e.raw(a, c) - e.raw(b, c));
        if (!le_rel(diff, 2.0 * d)) {
          return "coordinate " + std::to_string(c) + " on (" + std::to_string(a) + "," +
                 std::to_string(b) + "): " + format_number(diff) + " > 2d = " + format_number(2.0 * d);
        }
      }
      const double m = e.distance(a, b);
      if (!le_rel(m, expansion * d)) {
        return "expansion on (" + std::to_string(a) + "," + std::to_string(b) + "): " +
               format_number(m / d) + " > " + format_number(expansion);
      }
    }
  }
  return std::nullopt;
}

void write_coordinates_csv(std::ostream &out, const CoordinateEmbedding &e) {
  for (std::size_t v = 0; v < e.n; ++v) {
    for (std::size_t c = 0; c < e.dim; ++c) {
      if (c) out << ',';
      out << format_number(e.coords[v * e.dim + c]);
    }
    out << '\n';
  }
}

Json to_json(const CoordinateEmbedding &e) {
  Json scales = Json::array();
  for (const ScaleBlock &b : e.scales) {
    scales.push_back({{"scale", b.scale},
                      {"delta_hat", b.delta_hat},
                      {"rounds", b.rounds},
                      {"bits", b.max_bits},
                      {"coordinates", b.coordinates},
                      {"normalization", b.normalization}});
  }
  Json coords = Json::array();
  for (const CoordinateInfo &c : e.info) {
    coords.push_back({{"scale", c.scale}, {"round", c.round}, {"bit", c.bit}});
  }
  return {{"points", e.n}, {"dim", e.dim}, {"p", e.p}, {"delta", e.delta},
          {"scales", std::move(scales)}, {"coordinates", std::move(coords)}};
}

}  // namespace mramsey
