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

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "mramsey/metric.hpp"
#include "mramsey/ultrametric.hpp"

namespace mramsey::testing {

inline MetricSpace fixture(const std::vector<std::string> &tokens) {
  return generate(FixtureSpec::parse(tokens));
}
inline MetricSpace c22() { return fixture({"C", "2", "2", "10"}); }
inline MetricSpace l4() { return fixture({"L", "4"}); }
inline MetricSpace u4() { return fixture({"U", "4"}); }
inline MetricSpace two_points() { return MetricSpace::from_matrix(2, {0, 1, 1, 0}); }

inline Subspace ids(std::vector<PointId> v) { return Subspace::from_unsorted(std::move(v)); }

// Label of the deepest common ancestor, found by walking parent links.
inline double walk_distance(const HstTree &t, PointId a, PointId b) {
  if (a == b) return 0.0;
  std::vector<NodeId> up;
  for (NodeId v = t.leaf(a); v != kNoNode; v = t.node(v).parent) up.push_back(v);
  for (NodeId v = t.leaf(b); v != kNoNode; v = t.node(v).parent) {
    if (std::find(up.begin(), up.end(), v) != up.end()) return t.node(v).label;
  }
  return -1.0;
}

// Random metric: shortest paths over a complete graph with integer weights.
inline MetricSpace random_metric(std::size_t n, std::uint64_t seed) {
  SeededRng rng(seed);
  std::vector<Edge> edges;
  for (PointId i = 0; i < n; ++i)
    for (PointId j = i + 1; j < n; ++j)
      edges.push_back({i, j, static_cast<double>(1 + rng.below(20))});
  return MetricSpace::from_graph(n, edges);
}

}  // namespace mramsey::testing
