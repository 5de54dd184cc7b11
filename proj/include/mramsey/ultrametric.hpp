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

// Labeled rooted trees realizing ultrametrics, with O(1) LCA.

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mramsey/metric.hpp"

namespace mramsey {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = static_cast<NodeId>(-1);

struct HstNode {
  double label = 0.0;
  std::vector<NodeId> children;
  std::optional<PointId> leaf;
  NodeId parent = kNoNode;
};

/// Euler tour + sparse-table range minimum over tour depths.
class LcaIndex {
 public:
  LcaIndex() = default;
  explicit LcaIndex(const std::vector<HstNode> &nodes, NodeId root);

  // Constant number of table reads regardless of tree size: two first
  // occurrences, one log, two sparse-table cells. Adds 5 to *probes if given.
  NodeId lca(NodeId a, NodeId b, std::uint64_t *probes = nullptr) const;

 private:
  std::vector<NodeId> tour_;
  std::vector<std::uint32_t> depth_;   // depth of tour_[i]
  std::vector<std::uint32_t> first_;   // first tour position, per node
  std::vector<std::uint8_t> log2_;     // floor(log2(i))
  std::vector<std::vector<std::uint32_t>> table_;  // argmin tour positions
};

class HstTree {
 public:
  HstTree() = default;

  // Takes the nodes as given (no collapsing, no validation) and builds the
  // parent links, the leaf registry and the LCA index.
  static HstTree from_nodes(std::vector<HstNode> nodes, NodeId root, double k = 1.0);

  std::size_t size() const noexcept { return nodes_.size(); }
  NodeId root() const noexcept { return root_; }
  double k() const noexcept { return k_; }
  const HstNode &node(NodeId id) const { return nodes_[id]; }
  const std::vector<HstNode> &nodes() const noexcept { return nodes_; }
  bool is_leaf(NodeId id) const { return nodes_[id].leaf.has_value(); }

  // Points with at least one leaf, ascending.
  const Subspace &points() const noexcept { return points_; }
  std::size_t leaf_count() const noexcept { return leaf_count_; }
  // Leaf handles of a point, ascending; empty if the point is absent.
  std::span<const NodeId> leaves_of(PointId p) const;
  // First leaf of p; throws ForeignLeaf if p has none.
  NodeId leaf(PointId p) const;

  NodeId lca(NodeId a, NodeId b, std::uint64_t *probes = nullptr) const {
    return index_.lca(a, b, probes);
  }
  // Point ids of every leaf below `id` (with repetition for multi-leaf trees).
  std::vector<PointId> leaves_under(NodeId id) const;

 private:
  std::vector<HstNode> nodes_;
  NodeId root_ = kNoNode;
  double k_ = 1.0;
  Subspace points_;
  std::size_t leaf_count_ = 0;
  std::vector<std::uint32_t> reg_offsets_;
  std::vector<NodeId> reg_leaves_;
  LcaIndex index_;
};

/// Bottom-up tree assembly. Unary internal nodes collapse into their child;
/// finish() renumbers nodes in preorder so equal constructions serialize
/// identically.
class HstBuilder {
 public:
  NodeId add_leaf(PointId p);
  NodeId add_internal(double label, std::vector<NodeId> children);
  HstTree finish(NodeId root, double k = 1.0) &&;

 private:
  std::vector<HstNode> nodes_;
};

// Label of lca(a, b); 0 when a == b. Throws ForeignLeaf for non-leaf or
// out-of-range handles.
double um_distance(const HstTree &tree, NodeId a, NodeId b);
// Tree distance between the first leaves of two points.
double um_point_distance(const HstTree &tree, PointId x, PointId y);
// Walk-to-root reference.
NodeId naive_lca(const HstTree &tree, NodeId a, NodeId b);

struct HstViolation {
  NodeId node;
  std::string rule;    // leaf-label, internal-label, label-decay, unary-node, strong-triangle, structure
  std::string detail;
};

// Exhaustive strong-triangle check on leaf triples up to `exhaustive_limit`
// leaves, seeded sampling of `samples` triples above.
std::optional<HstViolation> validate_hst(const HstTree &tree, double k,
                                         std::size_t exhaustive_limit = 64,
                                         std::size_t samples = 20000,
                                         std::uint64_t seed = 1);

}  // namespace mramsey
