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

#include "mramsey/cover_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>

#include "mramsey/error.hpp"
#include "mramsey/serialize.hpp"

namespace mramsey {

namespace fs = std::filesystem;

std::size_t RamseyCover::space() const {
  std::size_t s = 0;
  for (const auto &l : layers) s += l.ground.size();
  return s;
}

RamseyCover build_cover(const MetricSpace &x, const WeightFunction &w,
                        const RamseyParams &params) {
  RamseyCover cover;
  cover.params = params;
  cover.home.assign(x.size(), std::numeric_limits<std::uint32_t>::max());
  Subspace rest = x.all();
  while (!rest.empty()) {
    RamseyEmbedding e = build_ramsey_embedding(x, w, rest, params);
    if (e.core.empty()) {
      throw GuaranteeViolation("layer " + std::to_string(cover.layers.size()) + " has a nonempty core",
                               0, 1);
    }
    for (PointId p : e.core) cover.home[p] = static_cast<std::uint32_t>(cover.layers.size());
    Subspace next = set_difference(rest, e.core);
    cover.layers.push_back({std::move(e.tree), std::move(rest), std::move(e.core)});
    rest = std::move(next);
  }
  return cover;
}

DistanceOracle DistanceOracle::build(const MetricSpace &x, const WeightFunction &w,
                                     const RamseyParams &params) {
  return from_cover(build_cover(x, w, params));
}

DistanceOracle DistanceOracle::from_cover(RamseyCover cover) {
  DistanceOracle o;
  o.params_ = cover.params;
  o.home_ = std::move(cover.home);
  const std::size_t n = o.home_.size();
  o.offsets_.assign(n + 1, 0);
  for (std::size_t p = 0; p < n; ++p) o.offsets_[p + 1] = o.offsets_[p] + o.home_[p] + 1;
  o.handles_.resize(o.offsets_[n]);
  for (std::size_t i = 0; i < cover.layers.size(); ++i) {
    const CoverLayer &l = cover.layers[i];
    for (PointId p : l.ground) {
      if (i <= o.home_[p]) o.handles_[o.offsets_[p] + i] = l.tree.leaf(p);
    }
    o.core_sizes_.push_back(l.core.size());
    o.trees_.push_back(std::move(cover.layers[i].tree));
  }
  return o;
}

double DistanceOracle::query(PointId x, PointId y, std::uint64_t *probes) const {
  const std::size_t n = home_.size();
  if (x >= n || y >= n) {
    throw Error(ErrorCode::kUnknownPoint, "point id out of range (n=" + std::to_string(n) + ")");
  }
  if (x == y) return 0.0;
  const std::uint32_t i = std::min(home_[x], home_[y]);
  const NodeId a = handles_[offsets_[x] + i];
  const NodeId b = handles_[offsets_[y] + i];
  const HstTree &t = trees_[i];
  const NodeId c = t.lca(a, b, probes);
  if (probes) *probes += 2 + 2 + 1;  // homes, handles, label
  return t.node(c).label;
}

OracleStats DistanceOracle::stats() const {
  OracleStats s;
  s.points = home_.size();
  s.layers = trees_.size();
  for (const HstTree &t : trees_) {
    s.layer_sizes.push_back(t.points().size());
    s.space += t.points().size();
  }
  s.core_sizes = core_sizes_;
  return s;
}

StretchSummary DistanceOracle::stretch(const MetricSpace &x) const {
  StretchSummary s;
  s.min = std::numeric_limits<double>::infinity();
  double sum = 0.0, sq = 0.0;
  const std::size_t n = x.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const double r = query(static_cast<PointId>(a), static_cast<PointId>(b)) /
                       x.dist(static_cast<PointId>(a), static_cast<PointId>(b));
      ++s.pairs;
      s.max = std::max(s.max, r);
      s.min = std::min(s.min, r);
      sum += r;
      sq += r * r;
      const auto k = static_cast<std::size_t>(std::max(0.0, std::floor(std::log2(r))));
      if (s.histogram.size() <= k) s.histogram.resize(k + 1, 0);
      ++s.histogram[k];
    }
  }
  if (s.pairs) {
    s.mean = sum / static_cast<double>(s.pairs);
    s.l2 = std::sqrt(sq / static_cast<double>(s.pairs));
  } else {
    s.min = 0.0;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Persistence

namespace {

constexpr char kMagic[4] = {'M', 'R', 'H', 'T'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ofstream &out, std::uint32_t v) {
  const unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                              static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  out.write(reinterpret_cast<const char *>(b), 4);
}

std::uint32_t get_u32(std::ifstream &in) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char *>(b), 4)) {
    throw Error(ErrorCode::kMalformedInput, "oracle table is truncated");
  }
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

std::string layer_file(std::size_t i) { return "layer_" + std::to_string(i) + ".json"; }

}  // namespace

void DistanceOracle::save(const std::string &dir) const {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create '" + dir + "': " + ec.message());
  const fs::path root(dir);
  Json layers = Json::array();
  for (std::size_t i = 0; i < trees_.size(); ++i) {
    write_text_file((root / layer_file(i)).string(), dump(to_json(trees_[i])));
    Json l;
    l["file"] = layer_file(i);
    l["points"] = trees_[i].points().size();
    l["core"] = core_sizes_[i];
    layers.push_back(std::move(l));
  }
  {
    std::ofstream out(root / "table.bin", std::ios::binary);
    if (!out) throw Error(ErrorCode::kIo, "cannot write oracle table");
    out.write(kMagic, 4);
    put_u32(out, kVersion);
    put_u32(out, static_cast<std::uint32_t>(home_.size()));
    put_u32(out, static_cast<std::uint32_t>(trees_.size()));
    for (auto v : home_) put_u32(out, v);
    for (auto v : offsets_) put_u32(out, v);
    for (auto v : handles_) put_u32(out, v);
    if (!out) throw Error(ErrorCode::kIo, "write failed for oracle table");
  }
  Json m;
  m["format"] = "mramsey-oracle";
  m["version"] = kVersion;
  m["points"] = home_.size();
  m["alpha"] = alpha();
  m["params"] = to_json(params_);
  m["layers"] = std::move(layers);
  write_text_file((root / "manifest.json").string(), dump(m));
}

DistanceOracle DistanceOracle::load(const std::string &dir) {
  const fs::path root(dir);
  const Json m = load_json_file((root / "manifest.json").string());
  DistanceOracle o;
  try {
    o.params_ = params_from_json(m.at("params"));
    for (const auto &l : m.at("layers")) {
      o.trees_.push_back(tree_from_json(load_json_file((root / l.at("file").get<std::string>()).string())));
      o.core_sizes_.push_back(l.at("core").get<std::size_t>());
    }
  } catch (const Json::exception &e) {
    throw Error(ErrorCode::kMalformedInput, std::string("oracle manifest: ") + e.what());
  }
  std::ifstream in(root / "table.bin", std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + (root / "table.bin").string() + "'");
  char magic[4];
  if (!in.read(magic, 4) || !std::equal(magic, magic + 4, kMagic)) {
    throw Error(ErrorCode::kMalformedInput, "oracle table has a bad magic number");
  }
  if (get_u32(in) != kVersion) throw Error(ErrorCode::kMalformedInput, "unsupported oracle table version");
  const std::uint32_t n = get_u32(in);
  const std::uint32_t layers = get_u32(in);
  if (layers != o.trees_.size()) throw Error(ErrorCode::kMalformedInput, "layer count mismatch");
  o.home_.resize(n);
  for (auto &v : o.home_) {
    v = get_u32(in);
    if (v >= layers) throw Error(ErrorCode::kMalformedInput, "home index out of range");
  }
  o.offsets_.resize(static_cast<std::size_t>(n) + 1);
  for (auto &v : o.offsets_) v = get_u32(in);
  for (std::size_t p = 0; p < n; ++p) {
    if (o.offsets_[p + 1] != o.offsets_[p] + o.home_[p] + 1) {
      throw Error(ErrorCode::kMalformedInput, "handle offsets inconsistent with homes");
    }
  }
  o.handles_.resize(o.offsets_[n]);
  for (auto &v : o.handles_) v = get_u32(in);
  for (std::size_t p = 0; p < n; ++p) {
    for (std::uint32_t i = 0; i <= o.home_[p]; ++i) {
      const NodeId h = o.handles_[o.offsets_[p] + i];
      const HstTree &t = o.trees_[i];
      if (h >= t.size() || t.node(h).leaf != static_cast<PointId>(p)) {
        throw Error(ErrorCode::kMalformedInput, "handle of point " + std::to_string(p) +
                                                    " in layer " + std::to_string(i) +
                                                    " is not its leaf");
      }
    }
  }
  return o;
}

}  // namespace mramsey
