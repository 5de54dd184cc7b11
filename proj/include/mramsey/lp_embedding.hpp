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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mramsey/decomposition.hpp"
#include "mramsey/metric.hpp"
#include "mramsey/serialize.hpp"

namespace mramsey {

// Provenance of one output coordinate.
struct CoordinateInfo {
  int scale = 0;        // j, with delta_hat = diam / 2^j
  std::size_t round = 0;
  int bit = 0;
  double normalization = 1.0;
};

struct ScaleBlock {
  int scale = 0;
  double delta_hat = 0.0;
  std::size_t rounds = 0;
  int max_bits = 0;         // longest codeword in the block
  std::size_t coordinates = 0;
  double normalization = 1.0;  // coordinates^(-1/p)
};

// Experimental multi-scale coordinate embedding built from padded partition
// bundles, one binary codeword per cluster.
struct CoordinateEmbedding {
  std::size_t n = 0;
  std::size_t dim = 0;
  double p = 2.0;
  double delta = 0.5;
  std::vector<double> coords;  // row-major n x dim, normalized
  std::vector<CoordinateInfo> info;
  std::vector<ScaleBlock> scales;

  const double *row(PointId x) const { return coords.data() + static_cast<std::size_t>(x) * dim; }
  double coordinate(PointId x, std::size_t c) const { return coords[static_cast<std::size_t>(x) * dim + c]; }
  // Before the block normalization.
  double raw(PointId x, std::size_t c) const { return coordinate(x, c) / info[c].normalization; }
  // l_p distance between two embedded points.
  double distance(PointId x, PointId y) const;
};

CoordinateEmbedding deterministic_lp_embed(const MetricSpace &x, double p, double delta);

// Per-coordinate Lipschitz bound, expansion bound, finiteness and the
// dimension bound; returns the first failure.
std::optional<std::string> check_lp_embedding(const MetricSpace &x, const CoordinateEmbedding &e);

void write_coordinates_csv(std::ostream &out, const CoordinateEmbedding &e);
Json to_json(const CoordinateEmbedding &e);  // manifest, no coordinates

}  // namespace mramsey
