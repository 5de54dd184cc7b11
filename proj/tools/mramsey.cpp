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

// Command-line front end. Every command wraps one library operation, writes
// its artifact plus <out>.manifest.json, and exits 0 on success, 1 on usage
// or input errors, 2 when a guarantee check fails.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mramsey/analysis.hpp"
#include "mramsey/cover_oracle.hpp"
#include "mramsey/error.hpp"
#include "mramsey/format.hpp"
#include "mramsey/lp_embedding.hpp"
#include "mramsey/metric.hpp"
#include "mramsey/multi_embedding.hpp"
#include "mramsey/ramsey.hpp"
#include "mramsey/ramsey_embedding.hpp"
#include "mramsey/serialize.hpp"
#include "mramsey/ultrametric.hpp"
#include "mramsey/version.hpp"

namespace fs = std::filesystem;
using namespace mramsey;

namespace {

constexpr int kUsage = 1;
constexpr int kViolation = 2;

// Thrown for bad flags or inputs that CLI11 cannot catch by itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fnv1a_hex(const std::string &bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Manifest {
 public:
  explicit Manifest(std::string command) : start_(std::chrono::steady_clock::now()) {
    j_["command"] = std::move(command);
    j_["version"] = kVersion;
    j_["parameters"] = Json::object();
    j_["inputs"] = Json::array();
    j_["outputs"] = Json::array();
  }
  template <class T>
  void param(const std::string &key, const T &value) { j_["parameters"][key] = value; }
  void input(const std::string &path) {
    if (path.empty()) return;
    j_["inputs"].push_back({{"path", path}, {"fnv1a64", fnv1a_hex(read_file(path))}});
  }
  void input_descriptor(const std::string &d) { j_["input"] = d; }
  void output(const std::string &path) {
    if (fs::is_directory(path)) {
      std::vector<fs::path> files;
      for (const auto &e : fs::directory_iterator(path)) files.push_back(e.path());
      std::sort(files.begin(), files.end());
      for (const auto &f : files) output(f.string());
      return;
    }
    j_["outputs"].push_back({{"path", path}, {"fnv1a64", fnv1a_hex(read_file(path))}});
  }
  void seed(std::uint64_t s) { j_["seed"] = s; }
  void write(std::string out) {
    while (out.size() > 1 && out.back() == '/') out.pop_back();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    j_["timings"] = {{"wall_seconds", secs}};
    write_text_file(out + ".manifest.json", dump(j_));
  }

 private:
  Json j_;
  std::chrono::steady_clock::time_point start_;
};

// ---------------------------------------------------------------------------
// Shared flags.

struct InputFlags {
  std::string matrix;
  std::string points;
  std::string graph;
  std::string weights;
  bool strict = false;

  void add(CLI::App *c, bool required = true) {
    auto *g = c->add_option_group("input");
    g->add_option("--in", matrix, "distance matrix CSV");
    g->add_option("--points", points, "point cloud JSON");
    g->add_option("--graph", graph, "weighted edge list");
    if (required) g->require_option(1);
    else g->require_option(0, 1);
    c->add_option("--weights", weights, "one positive weight per line");
    c->add_flag("--strict", strict, "run the triangle check on matrix input");
  }
  bool given() const { return !matrix.empty() || !points.empty() || !graph.empty(); }
  MetricSpace load() const {
    if (!matrix.empty()) return load_matrix_csv(matrix, strict);
    if (!points.empty()) return load_points_json(points);
    if (!graph.empty()) return load_graph_edges(graph);
    throw UsageError("one of --in, --points, --graph is required");
  }
  WeightFunction load_weights_for(std::size_t n) const {
    return weights.empty() ? WeightFunction::unit(n) : load_weights(weights, n);
  }
  void record(Manifest &m) const {
    m.input(matrix);
    m.input(points);
    m.input(graph);
    m.input(weights);
  }
};

struct ParamFlags {
  std::string variant = "basic";
  int t = 2;
  double delta = 0.5;
  double eps = 0.1;
  std::string schedule = "square";

  void add(CLI::App *c, bool with_variant) {
    if (with_variant) {
      c->add_option("--variant", variant, "basic | partial | scaling")
          ->check(CLI::IsMember({"basic", "partial", "scaling"}));
    }
    c->add_option("--t", t, "distortion parameter (basic)")->check(CLI::Range(2, 1 << 20));
    c->add_option("--delta", delta, "size fraction (partial, scaling)");
    c->add_option("--eps", eps, "excluded pair fraction (partial)");
    c->add_option("--schedule", schedule, "square | loglog | power:<p> (scaling)");
  }
  RamseyParams build() const {
    RamseyParams p;
    if (variant == "basic") {
      p.variant = RamseyVariant::kBasic;
      p.t = t;
    } else if (variant == "partial") {
      p.variant = RamseyVariant::kPartial;
      p.delta = delta;
      p.epsilon = eps;
      p.t = partial_t(delta, eps);
    } else {
      p.variant = RamseyVariant::kScaling;
      p.delta = delta;
      p.t = 0;
      p.schedule = ScalingSchedule::parse(schedule);
    }
    return p;
  }
};

void write_json(const std::string &path, const Json &j) { write_text_file(path, dump(j)); }

std::vector<std::string> split_list(const std::string &s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

double parse_q(const std::string &s) {
  if (s == "inf") return std::numeric_limits<double>::infinity();
  try {
    return std::stod(s);
  } catch (const std::exception &) {
    throw UsageError("--q: cannot parse '" + s + "'");
  }
}

// ---------------------------------------------------------------------------
// Verification from serialized artifacts.

struct Check {
  bool ok = true;
  std::string message;
  void fail(const std::string &m) {
    if (ok) message = m;
    ok = false;
  }
};

Check verify_artifact(const Json &art, const MetricSpace &x, const WeightFunction &w) {
  Check c;
  const HstTree tree = tree_from_json(art);
  const std::size_t n = x.size();
  if (auto v = validate_hst(tree, tree.k(), 256)) {
    c.fail("rule " + v->rule + " at node " + std::to_string(v->node) + ": " + v->detail);
    return c;
  }
  const RamseyParams params = params_from_json(art.at("params"));
  const bool embedding = art.contains("core");
  const Subspace leaves = tree.points();
  for (PointId p : leaves) {
    if (p >= n) {
      c.fail("rule leaf-set: leaf point " + std::to_string(p) + " outside the metric");
      return c;
    }
  }
  const Subspace s = subspace_from_json(art.at(embedding ? "ground" : "subspace"));
  if (s != leaves) {
    c.fail("rule leaf-set: tree leaves differ from the recorded point set");
    return c;
  }
  const Subspace core = embedding ? subspace_from_json(art.at("core")) : s;
  const double need_size = params.variant == RamseyVariant::kBasic
                               ? ceil_tolerant(std::pow(static_cast<double>(n), 1.0 - 1.0 / params.t))
                               : ceil_tolerant(params.delta * static_cast<double>(n));
  if (w.total(x.all()) == static_cast<double>(n) || params.variant != RamseyVariant::kBasic) {
    if (static_cast<double>(core.size()) < need_size) {
      c.fail("rule size: |S| = " + std::to_string(core.size()) + " < " + format_number(need_size));
    }
  } else if (auto v = verify_weighted_certificate(core, w, 1.0 - 1.0 / params.t)) {
    c.fail("rule certificate: w^psi(S) = " + format_number(v->lhs) + " < w(X)^psi = " +
           format_number(v->rhs));
  }
  const std::vector<PointPair> pairs = embedding ? core_pairs(core, n) : subspace_pairs(s);
  std::size_t bad = 0;
  const double fixed = embedding ? embedding_bound(params) : subspace_bound(params);
  for (auto [a, b] : pairs) {
    const double d = x.dist(a, b);
    const double du = um_point_distance(tree, a, b);
    if (du < d) {
      c.fail("rule non-contraction: d_U(" + std::to_string(a) + "," + std::to_string(b) +
             ") = " + format_number(du) + " < d = " + format_number(d));
      return c;
    }
    const double bound =
        params.variant == RamseyVariant::kScaling
            ? (embedding ? embedding_bound(params, std::min(pair_threshold(x, w, a, b), 1.0))
                         : subspace_bound(params, std::min(pair_threshold(x, w, a, b), 1.0)))
            : fixed;
    if (du > bound * d) {
      if (params.variant == RamseyVariant::kPartial) {
        ++bad;
      } else {
        c.fail("rule distortion: d_U/d = " + format_number(du / d) + " > " + format_number(bound) +
               " on (" + std::to_string(a) + "," + std::to_string(b) + ")");
        return c;
      }
    }
  }
  if (params.variant == RamseyVariant::kPartial) {
    const double allowed = params.epsilon * static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    if (static_cast<double>(bad) > allowed) {
      c.fail("rule partial: " + std::to_string(bad) + " distorted pairs > " + format_number(allowed));
    }
  }
  return c;
}

// ---------------------------------------------------------------------------

struct Options {
  InputFlags input;
  ParamFlags params;
  std::string out;
  std::vector<std::string> fixture;
  std::uint64_t seed = 1;
  std::string weights_range;
  std::string weights_out;
  std::string artifact;
  std::string dir;
  PointId qx = 0;
  PointId qy = 0;
  std::string sizes = "256,1024";
  std::string bench_fixture = "graph";
  std::size_t sample = 0;
  std::size_t paths = 1000;
  std::size_t max_len = 5;
  double scale = 0.0;
  double p = 2.0;
  std::string universe = "auto";
  std::string qs = "1,2,inf";
};

int run_gen(const Options &o) {
  FixtureSpec spec = FixtureSpec::parse(o.fixture);
  if (!spec.seed && (spec.kind == FixtureKind::kPlanar || spec.kind == FixtureKind::kGraph)) {
    spec.seed = o.seed;
  }
  const MetricSpace x = generate(spec);
  std::ostringstream csv;
  write_matrix_csv(csv, x);
  write_text_file(o.out, csv.str());
  Manifest m("gen");
  m.input_descriptor(spec.describe());
  if (spec.seed) m.seed(*spec.seed);
  m.output(o.out);
  if (!o.weights_out.empty()) {
    int lo = 1, hi = 16;
    if (!o.weights_range.empty()) {
      const auto parts = split_list(o.weights_range);
      if (parts.size() != 2) throw UsageError("--weight-range expects lo,hi");
      lo = std::stoi(parts[0]);
      hi = std::stoi(parts[1]);
    }
    std::ostringstream ws;
    write_weights(ws, generate_integer_weights(x.size(), lo, hi, o.seed));
    write_text_file(o.weights_out, ws.str());
    m.param("weight_range", std::vector<int>{lo, hi});
    m.seed(o.seed);
    m.output(o.weights_out);
  }
  m.write(o.out);
  return 0;
}

int run_subspace(const Options &o, const std::string &variant) {
  const MetricSpace x = o.input.load();
  const WeightFunction w = o.input.load_weights_for(x.size());
  RamseyResult r;
  if (variant == "ramsey") r = ramsey_subspace(x, w, o.params.t);
  else if (variant == "partial") r = partial_ramsey(x, w, o.params.delta, o.params.eps);
  else r = scaling_ramsey(x, w, o.params.delta, ScalingSchedule::parse(o.params.schedule));
  Json j = to_json(r);
  const DistortionReport rep =
      distortion_report(x, [&](PointId a, PointId b) { return um_point_distance(r.tree, a, b); },
                        subspace_pairs(r.s), {1.0, 2.0}, DistortionMode::kNonContractive, "subspace");
  j["report"] = to_json(rep);
  write_json(o.out, j);
  Manifest m(variant);
  o.input.record(m);
  m.param("params", to_json(r.params));
  m.output(o.out);
  m.write(o.out);
  std::cout << "|S| = " << r.s.size() << ", max distortion " << format_number(rep.max_ratio) << "\n";
  return 0;
}

int run_embed(const Options &o) {
  const MetricSpace x = o.input.load();
  const WeightFunction w = o.input.load_weights_for(x.size());
  const RamseyParams params = o.params.build();
  const RamseyEmbedding e = build_ramsey_embedding(x, w, x.all(), params);
  Json j = to_json(e);
  const DistortionReport rep = distortion_report(
      x, [&](PointId a, PointId b) { return um_point_distance(e.tree, a, b); },
      core_pairs(e.core, x.size()), {1.0, 2.0}, DistortionMode::kNonContractive, "core x X");
  j["report"] = to_json(rep);
  write_json(o.out, j);
  Manifest m("embed");
  o.input.record(m);
  m.param("params", to_json(params));
  m.output(o.out);
  m.write(o.out);
  std::cout << "|core| = " << e.core.size() << ", max distortion " << format_number(rep.max_ratio) << "\n";
  return 0;
}

int run_cover(const Options &o) {
  const MetricSpace x = o.input.load();
  const WeightFunction w = o.input.load_weights_for(x.size());
  const RamseyParams params = o.params.build();
  const RamseyCover cover = build_cover(x, w, params);
  Json layers = Json::array();
  for (const CoverLayer &l : cover.layers) {
    Json lj = to_json(l.tree);
    lj["ground"] = to_json(l.ground);
    lj["core"] = to_json(l.core);
    layers.push_back(std::move(lj));
  }
  Json j{{"params", to_json(params)}, {"space", cover.space()}, {"home", cover.home},
         {"layers", std::move(layers)}};
  write_json(o.out, j);
  Manifest m("cover");
  o.input.record(m);
  m.param("params", to_json(params));
  m.output(o.out);
  m.write(o.out);
  std::cout << cover.layers.size() << " layers, space " << cover.space() << "\n";
  return 0;
}

int run_oracle_build(const Options &o) {
  const MetricSpace x = o.input.load();
  const WeightFunction w = o.input.load_weights_for(x.size());
  const RamseyParams params = o.params.build();
  const DistanceOracle oracle = DistanceOracle::build(x, w, params);
  oracle.save(o.out);
  Manifest m("oracle build");
  o.input.record(m);
  m.param("params", to_json(params));
  m.output(o.out);
  m.write(o.out);
  return 0;
}

int run_oracle_query(const Options &o) {
  const DistanceOracle oracle = DistanceOracle::load(o.dir);
  std::cout << format_number(oracle.query(o.qx, o.qy)) << "\n";
  return 0;
}

int run_oracle_bench(const Options &o) {
  const RamseyParams params = o.params.build();
  std::ostringstream csv;
  csv << "n,t,build_seconds,space,max_stretch,avg_stretch,l2_stretch,probes\n";
  for (const std::string &s : split_list(o.sizes)) {
    const FixtureSpec spec = FixtureSpec::parse({o.bench_fixture, s, std::to_string(o.seed)});
    const MetricSpace x = generate(spec);
    const auto t0 = std::chrono::steady_clock::now();
    const DistanceOracle oracle = DistanceOracle::build(x, WeightFunction::unit(x.size()), params);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    double mx = 0.0, sum = 0.0, sq = 0.0;
    std::size_t count = 0;
    std::uint64_t probes = 0;
    auto visit = [&](PointId a, PointId b) {
      std::uint64_t pr = 0;
      const double r = oracle.query(a, b, &pr) / x.dist(a, b);
      probes = std::max(probes, pr);
      mx = std::max(mx, r);
      sum += r;
      sq += r * r;
      ++count;
    };
    const std::size_t n = x.size();
    if (o.sample > 0) {
      SeededRng rng(o.seed);
      for (std::size_t i = 0; i < o.sample; ++i) {
        const auto a = static_cast<PointId>(rng.below(n));
        auto b = static_cast<PointId>(rng.below(n - 1));
        if (b >= a) ++b;
        visit(a, b);
      }
    } else {
      for (PointId a = 0; a < n; ++a)
        for (PointId b = a + 1; b < n; ++b) visit(a, b);
    }
    csv << n << ',' << params.t << ',' << format_number(secs) << ',' << oracle.stats().space << ','
        << format_number(mx) << ',' << format_number(sum / count) << ','
        << format_number(std::sqrt(sq / count)) << ',' << probes << '\n';
  }
  write_text_file(o.out, csv.str());
  std::cout << csv.str();
  Manifest m("oracle bench");
  m.input_descriptor(o.bench_fixture + " " + o.sizes);
  m.seed(o.seed);
  m.param("params", to_json(params));
  m.param("sample", o.sample);
  m.output(o.out);
  m.write(o.out);
  return 0;
}

int run_multiembed(const Options &o) {
  const MetricSpace x = o.input.load();
  const WeightFunction w = o.input.load_weights_for(x.size());
  const MultiEmbedding me = build_multi_embedding(x, w, o.params.eps);
  const PathDistortionReport rep = path_distortion_report(me, x, {o.paths, o.max_len, o.seed});
  Json j = to_json(me.tree);
  j["epsilon"] = me.epsilon;
  j["t"] = me.t;
  j["leaves"] = me.leaf_count();
  Json splits = Json::array();
  for (const MultiSplit &s : me.splits) {
    splits.push_back({{"z", s.z_size}, {"q", s.q_size}, {"p", s.p_size}, {"lambda", s.lambda},
                      {"diam_q", s.diam_q}, {"gap", s.gap}});
  }
  j["splits"] = std::move(splits);
  j["paths"] = {{"count", rep.paths}, {"max_ratio", rep.max_ratio}, {"min_ratio", rep.min_ratio},
                {"mean_ratio", rep.mean_ratio}, {"hops_noncontracting", rep.hops_noncontracting}};
  write_json(o.out, j);
  Manifest m("multiembed");
  o.input.record(m);
  m.param("epsilon", o.params.eps);
  m.param("paths", o.paths);
  m.seed(o.seed);
  m.output(o.out);
  m.write(o.out);
  if (rep.audit_failure) {
    std::cerr << "guarantee violated: " << *rep.audit_failure << "\n";
    return kViolation;
  }
  if (!rep.hops_noncontracting) {
    std::cerr << "guarantee violated: an image path is shorter than the metric path\n";
    return kViolation;
  }
  std::cout << me.leaf_count() << " leaves, max path distortion " << format_number(rep.max_ratio) << "\n";
  return 0;
}

int run_bundle(const Options &o) {
  const MetricSpace x = o.input.load();
  const WeightFunction w = o.input.load_weights_for(x.size());
  const double scale = o.scale > 0.0 ? o.scale : diameter(x, x.all()) / 2.0;
  const PartitionBundle b = build_partition_bundle(x, w, scale, o.params.delta);
  write_json(o.out, to_json(b));
  Manifest m("bundle");
  o.input.record(m);
  m.param("scale", scale);
  m.param("delta", o.params.delta);
  m.output(o.out);
  m.write(o.out);
  if (auto f = check_partition_bundle(x, b)) {
    std::cerr << "guarantee violated: " << *f << "\n";
    return kViolation;
  }
  std::cout << b.rounds.size() << " rounds\n";
  return 0;
}

int run_lpembed(const Options &o) {
  const MetricSpace x = o.input.load();
  const CoordinateEmbedding e = deterministic_lp_embed(x, o.p, o.params.delta);
  std::ostringstream csv;
  write_coordinates_csv(csv, e);
  write_text_file(o.out, csv.str());
  Json meta = to_json(e);
  const DistortionReport rep = distortion_report(
      x, [&](PointId a, PointId b) { return e.distance(a, b); }, subspace_pairs(x.all()),
      {1.0, 2.0}, DistortionMode::kGeneral, "all");
  meta["report"] = to_json(rep);
  const std::string meta_path = o.out + ".json";
  write_json(meta_path, meta);
  Manifest m("lpembed");
  o.input.record(m);
  m.param("p", o.p);
  m.param("delta", o.params.delta);
  m.output(o.out);
  m.output(meta_path);
  m.write(o.out);
  if (auto f = check_lp_embedding(x, e)) {
    std::cerr << "guarantee violated: " << *f << "\n";
    return kViolation;
  }
  std::cout << "dimension " << e.dim << ", distortion " << format_number(rep.worst) << "\n";
  return 0;
}

int run_analyze(const Options &o) {
  const MetricSpace x = o.input.load();
  const Json art = load_json_file(o.artifact);
  const HstTree tree = tree_from_json(art);
  std::string universe = o.universe;
  if (universe == "auto") universe = art.contains("core") ? "core" : "subspace";
  std::vector<PointPair> pairs;
  if (universe == "core") pairs = core_pairs(subspace_from_json(art.at("core")), x.size());
  else if (universe == "subspace") pairs = subspace_pairs(tree.points());
  else throw UsageError("--universe must be auto, core or subspace");
  std::vector<double> qs;
  for (const std::string &q : split_list(o.qs)) qs.push_back(parse_q(q));
  const MappedDistance mapped = [&](PointId a, PointId b) { return um_point_distance(tree, a, b); };
  const WeightFunction w = o.input.load_weights_for(x.size());
  Json j;
  j["distortion"] = to_json(distortion_report(x, mapped, pairs, qs, DistortionMode::kNonContractive,
                                              universe, {o.sample, o.seed}));
  j["partial"] = to_json(partial_report(x, mapped, pairs, o.params.eps, DistortionMode::kNonContractive));
  j["scaling"] = to_json(scaling_curve(x, w, mapped, pairs, DistortionMode::kNonContractive));
  write_json(o.out, j);
  Manifest m("analyze");
  o.input.record(m);
  m.input(o.artifact);
  m.param("universe", universe);
  m.param("q", o.qs);
  m.param("eps", o.params.eps);
  m.output(o.out);
  m.write(o.out);
  return 0;
}

int run_verify(const Options &o) {
  const MetricSpace x = o.input.load();
  const WeightFunction w = o.input.load_weights_for(x.size());
  const Check c = verify_artifact(load_json_file(o.artifact), x, w);
  if (!c.ok) {
    std::cerr << "guarantee violated: " << c.message << "\n";
    return kViolation;
  }
  std::cout << "ok\n";
  return 0;
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Ramsey subspaces, ultrametric embeddings and distance oracles"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);
  Options o;
  std::function<int()> action;

  auto *gen = app.add_subcommand("gen", "generate a fixture metric as a CSV matrix");
  gen->add_option("--fixture", o.fixture, "U n | L n | C k m s | planar n seed | graph n seed")
      ->required()
      ->expected(2, 4);
  gen->add_option("--out", o.out, "output CSV")->required();
  gen->add_option("--seed", o.seed, "seed when the fixture names none; weight seed");
  gen->add_option("--weights-out", o.weights_out, "also write seeded integer weights");
  gen->add_option("--weight-range", o.weights_range, "lo,hi (default 1,16)");
  gen->callback([&] { action = [&] { return run_gen(o); }; });

  for (const char *name : {"ramsey", "partial", "scaling"}) {
    const std::string kind = std::string(name) == "ramsey" ? "basic" : name;
    auto *c = app.add_subcommand(name, kind + " Ramsey subspace with its ultrametric");
    o.input.add(c);
    o.params.add(c, false);
    c->add_option("--out", o.out, "result JSON")->required();
    const std::string variant = name;
    c->callback([&, variant] { action = [&, variant] { return run_subspace(o, variant); }; });
  }

  auto *embed = app.add_subcommand("embed", "Ramsey embedding: core points with a global ultrametric");
  o.input.add(embed);
  o.params.add(embed, true);
  embed->add_option("--out", o.out, "embedding JSON")->required();
  embed->callback([&] { action = [&] { return run_embed(o); }; });

  auto *cover = app.add_subcommand("cover", "layered Ramsey cover");
  o.input.add(cover);
  o.params.add(cover, true);
  cover->add_option("--out", o.out, "cover JSON")->required();
  cover->callback([&] { action = [&] { return run_cover(o); }; });

  auto *oracle = app.add_subcommand("oracle", "approximate distance oracle");
  oracle->require_subcommand(1);
  auto *ob = oracle->add_subcommand("build", "build and save an oracle directory");
  o.input.add(ob);
  o.params.add(ob, true);
  ob->add_option("--out", o.out, "output directory")->required();
  ob->callback([&] { action = [&] { return run_oracle_build(o); }; });
  auto *oq = oracle->add_subcommand("query", "print the oracle estimate for a pair");
  oq->add_option("dir", o.dir, "oracle directory")->required();
  oq->add_option("x", o.qx)->required();
  oq->add_option("y", o.qy)->required();
  oq->callback([&] { action = [&] { return run_oracle_query(o); }; });
  auto *obench = oracle->add_subcommand("bench", "build/stretch table over fixture sizes");
  o.params.add(obench, true);
  obench->add_option("--sizes", o.sizes, "comma-separated n values");
  obench->add_option("--fixture", o.bench_fixture, "planar | graph")
      ->check(CLI::IsMember({"planar", "graph"}));
  obench->add_option("--seed", o.seed, "fixture seed");
  obench->add_option("--sample", o.sample, "sampled pairs per size (0: all pairs)");
  obench->add_option("--out", o.out, "benchmark CSV")->required();
  obench->callback([&] { action = [&] { return run_oracle_bench(o); }; });

  auto *multi = app.add_subcommand("multiembed", "ultrametric multi-embedding and path audit");
  o.input.add(multi);
  multi->add_option("--eps", o.params.eps, "epsilon in (0, 1]")->required();
  multi->add_option("--paths", o.paths, "sampled paths");
  multi->add_option("--max-len", o.max_len, "points per path");
  multi->add_option("--seed", o.seed, "path sampling seed");
  multi->add_option("--out", o.out, "result JSON")->required();
  multi->callback([&] { action = [&] { return run_multiembed(o); }; });

  auto *bundle = app.add_subcommand("bundle", "padded partition bundle at one scale");
  o.input.add(bundle);
  bundle->add_option("--scale", o.scale, "cluster diameter bound (default diam/2)");
  bundle->add_option("--delta", o.params.delta, "delta in (0, 1)");
  bundle->add_option("--out", o.out, "bundle JSON")->required();
  bundle->callback([&] { action = [&] { return run_bundle(o); }; });

  auto *lp = app.add_subcommand("lpembed", "experimental multi-scale coordinate embedding");
  o.input.add(lp);
  lp->add_option("--p", o.p, "norm exponent >= 1");
  lp->add_option("--delta", o.params.delta, "bundle delta in (0, 1)");
  lp->add_option("--out", o.out, "coordinate CSV; metadata goes to <out>.json")->required();
  lp->callback([&] { action = [&] { return run_lpembed(o); }; });

  auto *analyze = app.add_subcommand("analyze", "distortion statistics of a tree artifact");
  o.input.add(analyze);
  analyze->add_option("--tree", o.artifact, "result or embedding JSON")->required();
  analyze->add_option("--universe", o.universe, "auto | subspace | core");
  analyze->add_option("--q", o.qs, "comma-separated q values, inf allowed");
  analyze->add_option("--eps", o.params.eps, "partial fraction");
  analyze->add_option("--sample", o.sample, "sample this many pairs (0: exact)");
  analyze->add_option("--seed", o.seed, "pair sampling seed");
  analyze->add_option("--out", o.out, "report JSON")->required();
  analyze->callback([&] { action = [&] { return run_analyze(o); }; });

  auto *verify = app.add_subcommand("verify", "re-check a serialized result against its metric");
  verify->add_option("--in", o.artifact, "result or embedding JSON")->required();
  verify->add_option("--metric", o.input.matrix, "distance matrix CSV")->required();
  verify->add_option("--weights", o.input.weights);
  verify->callback([&] { action = [&] { return run_verify(o); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }
  try {
    return action();
  } catch (const GuaranteeViolation &e) {
    std::cerr << "guarantee violated: " << e.rule() << ": " << format_number(e.lhs()) << " > "
              << format_number(e.rhs()) << "\n";
    return kViolation;
  } catch (const UsageError &e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
