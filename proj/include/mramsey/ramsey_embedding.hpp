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

// Ultrametrics over the whole space whose distortion is bounded on every
// pair that touches a core point.

#pragma once

#include <vector>

#include "mramsey/metric.hpp"
#include "mramsey/ramsey.hpp"
#include "mramsey/ultrametric.hpp"

namespace mramsey {

struct EmbeddingNodeInfo {
  std::size_t ground_size = 0;
  std::size_t core_size = 0;  // |Z n C(Z)|
  int t = 0;
  double delta = 0.0;          // diam(Z)/2
  double eta = 0.0;            // 1/(4t)
  double padding = 0.0;        // d(P, Qbar)
  bool star = false;
  bool coreless = false;       // C(Z) ran empty; the subtree still covers Z
  // separation audit: min d(S(R), Z \ R), min d(S(Z \ R), R), both >= eta*delta/2
  double sep_inner = 0.0;
  double sep_outer = 0.0;
  double level = 0.0;          // scaling: l(Z)
  double invariant_lhs = 0.0;  // w^psi(S(Z))
  double invariant_rhs = 0.0;  // restricted-weight lower bound
};

struct RamseyEmbedding {
  HstTree tree;
  Subspace ground;
  Subspace core;
  std::vector<EmbeddingNodeInfo> per_node;
  RamseyParams params;
};

RamseyEmbedding ramsey_embed(const MetricSpace &x, const WeightFunction &w, int t);
RamseyEmbedding partial_ramsey_embed(const MetricSpace &x, const WeightFunction &w,
                                     double delta, double eps);
RamseyEmbedding scaling_ramsey_embed(const MetricSpace &x, const WeightFunction &w,
                                     double delta, const ScalingSchedule &schedule);

// Same recursion on a subset of the points (the cover iterates this).
RamseyEmbedding build_ramsey_embedding(const MetricSpace &x, const WeightFunction &w,
                                       const Subspace &ground, const RamseyParams &params);

// Stretch bound of the variant for a (core, any) pair; eps is the pair's
// scaling threshold and is ignored by the other variants.
double embedding_bound(const RamseyParams &params, double eps = 1.0);
// Same for subspace results (half of the embedding bound).
double subspace_bound(const RamseyParams &params, double eps = 1.0);

}  // namespace mramsey
