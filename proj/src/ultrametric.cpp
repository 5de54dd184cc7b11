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

#include "mramsey/ultrametric.hpp"

#include <algorithm>
#include <cmath>

#include "mramsey/error.hpp"
#include "mramsey/format.hpp"

namespace mramsey {

LcaIndex::LcaIndex(const std::vector<HstNode> &nodes, NodeId root) {
  const std::size_t n = nodes.size();
  first_.assign(n, 0);
  tour_.reserve(2 * n);
  depth_.reserve(2 * n);
  // (node, next child index)
  std::vector<std::pair<NodeId, std::size_t>> stack;
  stack.emplace_back(root, 0);
  first_[root] = 0;
  tour_.push_back(root);
  depth_.push_back(0);
  while (!stack.empty()) {
    auto &[v, next] = stack.back();
    if (next < nodes[v].children.size()) {
      const NodeId c = nodes[v].children[next++];
      first_[c] = static_cast<std::uint32_t>(tour_.size());
      tour_.push_back(c);
      depth_.push_back(static_cast<std::uint32_t>(stack.size()));
      stack.emplace_back(c, 0);
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        tour_.push_back(stack.back().first);
        depth_.push_back(static_cast<std::uint32_t>(stack.size() - 1));
      }
    }
  }
  const std::size_t m = tour_.size();
  log2_.assign(m + 1, 0);
  for (std::size_t i = 2; i <= m; ++i) log2_[i] = static_cast<std::uint8_t>(log2_[i / 2] + 1);
  table_.emplace_back(m);
  for (std::size_t i = 0; i < m; ++i) table_[0][i] = static_cast<std::uint32_t>(i);
  for (std::size_t lvl = 1; (std::size_t{1} << lvl) <= m; ++lvl) {
    const std::size_t half = std::size_t{1} << (lvl - 1);
    const auto &prev = table_[lvl - 1];
    std::vector<std::uint32_t> cur(m - (std::size_t{1} << lvl) + 1);
    for (std::size_t i = 0; i < cur.size(); ++i) {
      const std::uint32_t a = prev[i], b = prev[i + half];
      cur[i] = depth_[b] < depth_[a] ? b : a;
    }
    table_.push_back(std::move(cur));
  }
}

NodeId LcaIndex::lca(NodeId a, NodeId b, std::uint64_t *probes) const {
  std::uint32_t l = first_[a], r = first_[b];
  if (l > r) std::swap(l, r);
  const std::uint8_t lvl = log2_[r - l + 1];
  const std::uint32_t x = table_[lvl][l];
  const std::uint32_t y = table_[lvl][r - (std::uint32_t{1} << lvl) + 1];
  if (probes) *probes += 5;
  return tour_[depth_[y] < depth_[x] ? y : x];
}

HstTree HstTree::from_nodes(std::vector<HstNode> nodes, NodeId root, double k) {
  if (nodes.empty() || root >= nodes.size()) {
    throw Error(ErrorCode::kMalformedInput, "tree has no root");
  }
  HstTree t;
  t.root_ = root;
  t.k_ = k;
  for (auto &nd : nodes) nd.parent = kNoNode;
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    for (NodeId c : nodes[v].children) {
      if (c >= nodes.size() || c == root || nodes[c].parent != kNoNode) {
        throw Error(ErrorCode::kMalformedInput, "node " + std::to_string(v) +
                                                    " has an invalid or shared child");
      }
      nodes[c].parent = static_cast<NodeId>(v);
    }
  }
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    if (v != root && nodes[v].parent == kNoNode) {
      throw Error(ErrorCode::kMalformedInput, "node " + std::to_string(v) + " is unreachable");
    }
  }
  PointId max_point = 0;
  std::vector<PointId> pts;
  for (const auto &nd : nodes) {
    if (nd.leaf) {
      pts.push_back(*nd.leaf);
      max_point = std::max(max_point, *nd.leaf);
      ++t.leaf_count_;
    }
  }
  t.points_ = Subspace::from_unsorted(pts);
  const std::size_t slots = pts.empty() ? 0 : static_cast<std::size_t>(max_point) + 1;
  t.reg_offsets_.assign(slots + 1, 0);
  for (const auto &nd : nodes)
    if (nd.leaf) ++t.reg_offsets_[*nd.leaf + 1];
  for (std::size_t i = 0; i < slots; ++i) t.reg_offsets_[i + 1] += t.reg_offsets_[i];
  t.reg_leaves_.resize(t.leaf_count_);
  std::vector<std::uint32_t> fill(t.reg_offsets_.begin(), t.reg_offsets_.end() - 1);
  for (std::size_t v = 0; v < nodes.size(); ++v) {
    if (nodes[v].leaf) t.reg_leaves_[fill[*nodes[v].leaf]++] = static_cast<NodeId>(v);
  }
  t.index_ = LcaIndex(nodes, root);
  t.nodes_ = std::move(nodes);
  return t;
}

std::span<const NodeId> HstTree::leaves_of(PointId p) const {
  if (static_cast<std::size_t>(p) + 1 >= reg_offsets_.size()) return {};
  return std::span<const NodeId>(reg_leaves_.data() + reg_offsets_[p],
                                 reg_offsets_[p + 1] - reg_offsets_[p]);
}

NodeId HstTree::leaf(PointId p) const {
  auto ls = leaves_of(p);
  if (ls.empty()) throw Error(ErrorCode::kForeignLeaf, "point " + std::to_string(p) + " has no leaf");
  return ls[0];
}

std::vector<PointId> HstTree::leaves_under(NodeId id) const {
  std::vector<PointId> out;
  std::vector<NodeId> stack{id};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    if (nodes_[v].leaf) out.push_back(*nodes_[v].leaf);
    for (auto it = nodes_[v].children.rbegin(); it != nodes_[v].children.rend(); ++it)
      stack.push_back(*it);
  }
  return out;
}

NodeId HstBuilder::add_leaf(PointId p) {
  HstNode nd;
  nd.leaf = p;
  nodes_.push_back(std::move(nd));
  return static_cast<NodeId>(nodes_.size() - 1);
}

NodeId HstBuilder::add_internal(double label, std::vector<NodeId> children) {
  if (children.empty()) throw Error(ErrorCode::kMalformedInput, "internal node without children");
  if (children.size() == 1) return children[0];
  HstNode nd;
  nd.label = label;
  nd.children = std::move(children);
  nodes_.push_back(std::move(nd));
  return static_cast<NodeId>(nodes_.size() - 1);
}

HstTree HstBuilder::finish(NodeId root, double k) && {
  // preorder renumbering
  std::vector<NodeId> order;
  order.reserve(nodes_.size());
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    const NodeId v = stack.back();
    stack.pop_back();
    order.push_back(v);
    const auto &ch = nodes_[v].children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  std::vector<NodeId> remap(nodes_.size(), kNoNode);
  for (std::size_t i = 0; i < order.size(); ++i) remap[order[i]] = static_cast<NodeId>(i);
  std::vector<HstNode> out(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    HstNode &src = nodes_[order[i]];
    out[i].label = src.label;
    out[i].leaf = src.leaf;
    for (NodeId c : src.children) out[i].children.push_back(remap[c]);
  }
  return HstTree::from_nodes(std::move(out), 0, k);
}

namespace {

void require_leaf(const HstTree &tree, NodeId a) {
  if (a >= tree.size() || !tree.is_leaf(a)) {
    throw Error(ErrorCode::kForeignLeaf, "handle " + std::to_string(a) + " is not a leaf of this tree");
  }
}

}  // namespace

double um_distance(const HstTree &tree, NodeId a, NodeId b) {
  require_leaf(tree, a);
  require_leaf(tree, b);
  if (a == b) return 0.0;
  return tree.node(tree.lca(a, b)).label;
}

double um_point_distance(const HstTree &tree, PointId x, PointId y) {
  if (x == y) return 0.0;
  return um_distance(tree, tree.leaf(x), tree.leaf(y));
}

NodeId naive_lca(const HstTree &tree, NodeId a, NodeId b) {
  auto depth = [&](NodeId v) {
    std::size_t d = 0;
    while (tree.node(v).parent != kNoNode) {
      v = tree.node(v).parent;
      ++d;
    }
    return d;
  };
  std::size_t da = depth(a), db = depth(b);
  while (da > db) { a = tree.node(a).parent; --da; }
  while (db > da) { b = tree.node(b).parent; --db; }
  while (a != b) {
    a = tree.node(a).parent;
    b = tree.node(b).parent;
  }
  return a;
}

std::optional<HstViolation> validate_hst(const HstTree &tree, double k,
                                         std::size_t exhaustive_limit,
                                         std::size_t samples, std::uint64_t seed) {
  if (tree.size() == 0) return HstViolation{kNoNode, "structure", "empty tree"};
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const auto v = static_cast<NodeId>(i);
    const HstNode &nd = tree.node(v);
    if (nd.leaf) {
      if (!nd.children.empty()) return HstViolation{v, "structure", "leaf with children"};
      if (nd.label != 0.0) {
        return HstViolation{v, "leaf-label", "leaf label " + format_number(nd.label) + " != 0"};
      }
      continue;
    }
    if (nd.children.empty()) return HstViolation{v, "structure", "internal node without children"};
    if (nd.children.size() == 1) return HstViolation{v, "unary-node", "internal node with one child"};
    if (!(nd.label > 0.0)) {
      return HstViolation{v, "internal-label", "internal label " + format_number(nd.label) + " is not positive"};
    }
    for (NodeId c : nd.children) {
      const double cl = tree.node(c).label;
      if (!(cl <= nd.label / k)) {
        return HstViolation{c, "label-decay",
                            "child label " + format_number(cl) + " > parent label " +
                                format_number(nd.label) + " / k=" + format_number(k)};
      }
    }
  }
  std::vector<NodeId> leaves;
  for (std::size_t i = 0; i < tree.size(); ++i)
    if (tree.is_leaf(static_cast<NodeId>(i))) leaves.push_back(static_cast<NodeId>(i));
  auto check = [&](NodeId x, NodeId y, NodeId z) -> std::optional<HstViolation> {
    const double xz = um_distance(tree, x, z);
    const double bound = std::max(um_distance(tree, x, y), um_distance(tree, y, z));
    if (xz > bound) {
      return HstViolation{x, "strong-triangle",
                          "d(" + std::to_string(x) + "," + std::to_string(z) + ")=" +
                              format_number(xz) + " > max via " + std::to_string(y) + " = " +
                              format_number(bound)};
    }
    return std::nullopt;
  };
  const std::size_t m = leaves.size();
  if (m <= exhaustive_limit) {
    for (NodeId x : leaves)
      for (NodeId y : leaves)
        for (NodeId z : leaves)
          if (auto bad = check(x, y, z)) return bad;
  } else {
    SeededRng rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
      const NodeId x = leaves[rng.below(m)], y = leaves[rng.below(m)], z = leaves[rng.below(m)];
      if (auto bad = check(x, y, z)) return bad;
    }
  }
  return std::nullopt;
}

}  // namespace mramsey
