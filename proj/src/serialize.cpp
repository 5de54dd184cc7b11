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

#include "mramsey/serialize.hpp"

#include <fstream>
#include <sstream>

#include "mramsey/error.hpp"

namespace mramsey {

namespace {

// JSON has no infinity; absent paddings are written as null.
Json num(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

const char *variant_name(RamseyVariant v) {
  switch (v) {
    case RamseyVariant::kBasic: return "basic";
    case RamseyVariant::kPartial: return "partial";
    case RamseyVariant::kScaling: return "scaling";
  }
  return "?";
}

}  // namespace

Json to_json(const Subspace &s) { return Json(std::vector<PointId>(s.begin(), s.end())); }

Subspace subspace_from_json(const Json &j) {
  try {
    return Subspace::from_unsorted(j.get<std::vector<PointId>>());
  } catch (const Json::exception &e) {
    throw Error(ErrorCode::kMalformedInput, std::string("id array: ") + e.what());
  }
}

Json to_json(const HstTree &tree) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const HstNode &nd = tree.node(static_cast<NodeId>(i));
    Json o;
    o["id"] = i;
    o["label"] = nd.label;
    if (nd.leaf) o["leaf"] = *nd.leaf;
    if (!nd.children.empty()) o["children"] = nd.children;
    nodes.push_back(std::move(o));
  }
  Json j;
  j["k"] = tree.k();
  j["nodes"] = std::move(nodes);
  j["root"] = tree.root();
  return j;
}

HstTree tree_from_json(const Json &j) {
  try {
    const auto &arr = j.at("nodes");
    std::vector<HstNode> nodes(arr.size());
    for (const auto &o : arr) {
      const auto id = o.at("id").get<std::size_t>();
      if (id >= nodes.size()) throw Error(ErrorCode::kMalformedInput, "node id out of range");
      HstNode &nd = nodes[id];
      nd.label = o.at("label").get<double>();
      if (o.contains("leaf")) nd.leaf = o.at("leaf").get<PointId>();
      if (o.contains("children")) nd.children = o.at("children").get<std::vector<NodeId>>();
    }
    return HstTree::from_nodes(std::move(nodes), j.at("root").get<NodeId>(), j.value("k", 1.0));
  } catch (const Json::exception &e) {
    throw Error(ErrorCode::kMalformedInput, std::string("tree JSON: ") + e.what());
  }
}

Json to_json(const RamseyParams &p) {
  Json j;
  j["variant"] = variant_name(p.variant);
  switch (p.variant) {
    case RamseyVariant::kBasic:
      j["t"] = p.t;
      break;
    case RamseyVariant::kPartial:
      j["t"] = p.t;
      j["delta"] = p.delta;
      j["epsilon"] = p.epsilon;
      break;
    case RamseyVariant::kScaling:
      j["delta"] = p.delta;
      j["schedule"] = p.schedule->name();
      break;
  }
  return j;
}

RamseyParams params_from_json(const Json &j) {
  try {
    RamseyParams p;
    const auto v = j.at("variant").get<std::string>();
    if (v == "basic") {
      p.variant = RamseyVariant::kBasic;
      p.t = j.at("t").get<int>();
    } else if (v == "partial") {
      p.variant = RamseyVariant::kPartial;
      p.delta = j.at("delta").get<double>();
      p.epsilon = j.at("epsilon").get<double>();
      p.t = partial_t(p.delta, p.epsilon);
    } else if (v == "scaling") {
      p.variant = RamseyVariant::kScaling;
      p.t = 0;
      p.delta = j.at("delta").get<double>();
      p.schedule = ScalingSchedule::parse(j.at("schedule").get<std::string>());
    } else {
      throw Error(ErrorCode::kMalformedInput, "unknown variant '" + v + "'");
    }
    return p;
  } catch (const Json::exception &e) {
    throw Error(ErrorCode::kMalformedInput, std::string("params JSON: ") + e.what());
  }
}

Json to_json(const RamseyDecomposition &d) {
  Json j;
  j["center"] = d.center;
  j["index"] = d.index;
  j["t"] = d.t;
  j["delta"] = d.delta;
  j["q"] = to_json(d.q);
  j["qbar"] = to_json(d.qbar);
  j["p"] = to_json(d.p);
  j["realized_padding"] = num(d.realized_padding);
  j["radii"] = d.radii;
  j["shell_weights"] = d.shell_weights;
  return j;
}

Json to_json(const PartitionBundle &b) {
  Json rounds = Json::array();
  for (const BundleRound &r : b.rounds) {
    Json clusters = Json::array();
    for (const BundleCluster &c : r.clusters) {
      Json o;
      o["members"] = to_json(c.members);
      o["core"] = to_json(c.core);
      o["eta"] = c.eta;
      o["t"] = c.t;
      o["padding"] = num(c.core_padding);
      clusters.push_back(std::move(o));
    }
    Json o;
    o["alive"] = to_json(r.alive);
    o["clusters"] = std::move(clusters);
    rounds.push_back(std::move(o));
  }
  Json j;
  j["delta_hat"] = b.delta_hat;
  j["delta"] = b.delta;
  j["rounds"] = std::move(rounds);
  return j;
}

Json to_json(const RamseyResult &r) {
  Json j = to_json(r.tree);
  j["subspace"] = to_json(r.s);
  j["psi"] = r.psi;
  j["params"] = to_json(r.params);
  Json per = Json::array();
  for (const RamseyNodeInfo &n : r.per_node) {
    Json o;
    o["size"] = n.ground_size;
    o["t"] = n.t;
    o["delta"] = n.delta;
    o["padding"] = num(n.padding);
    o["star"] = n.star;
    if (r.params.variant == RamseyVariant::kScaling) o["level"] = n.level;
    per.push_back(std::move(o));
  }
  j["per_node"] = std::move(per);
  return j;
}

Json to_json(const RamseyEmbedding &e) {
  Json j = to_json(e.tree);
  j["core"] = to_json(e.core);
  j["ground"] = to_json(e.ground);
  j["params"] = to_json(e.params);
  Json per = Json::array();
  for (const EmbeddingNodeInfo &n : e.per_node) {
    Json o;
    o["size"] = n.ground_size;
    o["t"] = n.t;
    o["eta"] = n.eta;
    o["delta"] = n.delta;
    o["star"] = n.star;
    o["coreless"] = n.coreless;
    per.push_back(std::move(o));
  }
  j["per_node"] = std::move(per);
  return j;
}

std::string dump(const Json &j) { return j.dump(2) + "\n"; }

Json load_json_file(const std::string &path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::exception &e) {
    throw Error(ErrorCode::kMalformedInput, path + ": " + e.what());
  }
}

void write_text_file(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::kIo, "write failed for '" + path + "'");
}

}  // namespace mramsey
