// Copyright 2026 The tcspan Authors.
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

#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tcspan/approx.hpp"
#include "tcspan/common.hpp"
#include "tcspan/constructions.hpp"
#include "tcspan/exact.hpp"
#include "tcspan/generators.hpp"
#include "tcspan/io.hpp"
#include "tcspan/mono.hpp"

namespace tcspan::cli {

namespace {

// ---------------------------------------------------------------------------
// Parameter access.

class ParamReader {
 public:
  ParamReader(std::string family, const Params& params)
      : family_(std::move(family)), params_(params) {}

  std::string str(const std::string& key, const std::string& def) {
    used_.push_back(key);
    auto it = params_.find(key);
    std::string v = it == params_.end() ? def : it->second;
    if (v.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  family_ + ": missing parameter " + key);
    }
    record_[key] = v;
    return v;
  }
  int64_t integer(const std::string& key, const std::string& def = "") {
    std::string v = str(key, def);
    size_t pos = 0;
    int64_t x = 0;
    try {
      x = std::stoll(v, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != v.size() || v.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  family_ + ": " + key + " must be an integer, got " + v);
    }
    record_[key] = x;
    return x;
  }
  int int32(const std::string& key, const std::string& def = "") {
    int64_t x = integer(key, def);
    if (x < INT32_MIN || x > INT32_MAX) {
      throw Error(ErrorCode::kInvalidArgument, family_ + ": " + key +
                                                   " out of range");
    }
    return static_cast<int>(x);
  }
  double real(const std::string& key, const std::string& def = "") {
    std::string v = str(key, def);
    size_t pos = 0;
    double x = 0;
    try {
      x = std::stod(v, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != v.size() || !std::isfinite(x)) {
      throw Error(ErrorCode::kInvalidArgument,
                  family_ + ": " + key + " must be a number, got " + v);
    }
    record_[key] = x;
    return x;
  }
  // Rejects parameters the family does not know.
  void finish() const {
    for (const auto& [key, value] : params_) {
      if (std::find(used_.begin(), used_.end(), key) == used_.end()) {
        throw Error(ErrorCode::kInvalidArgument,
                    family_ + ": unknown parameter " + key);
      }
    }
  }
  const Json& record() const { return record_; }

 private:
  std::string family_;
  const Params& params_;
  std::vector<std::string> used_;
  Json record_ = Json::object();
};

std::vector<std::vector<int>> parse_int_lists(const std::string& s) {
  std::vector<std::vector<int>> lists;
  std::stringstream outer(s);
  std::string part;
  while (std::getline(outer, part, ';')) {
    std::vector<int> list;
    std::stringstream inner(part);
    std::string item;
    while (std::getline(inner, item, ',')) {
      try {
        size_t pos = 0;
        list.push_back(std::stoi(item, &pos));
        if (pos != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw Error(ErrorCode::kInvalidArgument, "bad integer list: " + s);
      }
    }
    lists.push_back(std::move(list));
  }
  return lists;
}

Transform parse_transform(const std::string& s) {
  static const std::map<std::string, Transform> kNames = {
      {"T1", Transform::kT1}, {"T2", Transform::kT2}, {"T3", Transform::kT3},
      {"T4", Transform::kT4}, {"T5", Transform::kT5}};
  auto it = kNames.find(s);
  if (it == kNames.end()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown transform " + s);
  }
  return it->second;
}

Json minrep_json(const MinRepInstance& inst) {
  Json j;
  j["r"] = inst.r;
  j["cluster_size"] = inst.cluster_size;
  j["d"] = inst.d;
  j["m"] = inst.m.to_string();
  j["group_size"] = inst.group_size;
  std::vector<int> cluster(2 * inst.n());
  for (Vertex v = 0; v < 2 * inst.n(); ++v) {
    cluster[v] = v < inst.n() ? inst.left_cluster(v) : inst.right_cluster(v);
  }
  j["cluster"] = cluster;
  return j;
}

// ---------------------------------------------------------------------------
// Spanner helpers.

Json violation_json(const VerifyReport& rep) {
  if (!rep.violation) return nullptr;
  return Json{{"kind", rep.violation->kind == Violation::Kind::kForeignEdge
                           ? "foreign-edge"
                           : "missing-pair"},
              {"u", rep.violation->u},
              {"v", rep.violation->v}};
}

int64_t tr_size(const Digraph& g) {
  if (g.is_dag()) return transitive_reduction(g).m();
  return transitive_reduction(condense_scc(g).dag).m();
}

bool is_line(const Digraph& g) {
  if (g.m() != std::max(0, g.n() - 1)) return false;
  for (const Edge& e : g.edges())
    if (e.v != e.u + 1) return false;
  return true;
}

double rounded_ms(double ms) { return std::round(ms * 1000.0) / 1000.0; }

EdgeList read_pairs_file(const std::string& path, int n) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  ParsedEdgeList p = parse_edge_list(in);
  if (p.n != n) {
    throw Error(ErrorCode::kInvalidArgument,
                path + ": vertex count " + std::to_string(p.n) +
                    " differs from the graph's " + std::to_string(n));
  }
  return p.edges;
}

std::string format_edges(const std::string& format, const Digraph& g,
                         const EdgeList& h, const Json& report) {
  if (format == "edgelist") return to_edge_list(g.n(), h);
  if (format == "dot") {
    // Input edges solid, shortcuts dashed.
    EdgeList kept;
    for (const Edge& e : h)
      if (g.has_edge(e.u, e.v)) kept.push_back(e);
    return to_dot(Digraph(g.n(), kept), h);
  }
  Json j = report;
  Json edges = Json::array();
  for (const Edge& e : h) edges.push_back({e.u, e.v});
  j["edges"] = edges;
  return j.dump(2) + "\n";
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

std::string error_text(const Error& e) { return e.what(); }

void emit(const std::string& path, const std::string& contents,
          std::ostream& out) {
  if (path.empty() || path == "-") {
    out << contents;
  } else {
    write_file(path, contents);
  }
}

// ---------------------------------------------------------------------------
// Bench manifest expansion.

std::vector<Json> as_list(const Json& v) {
  if (v.is_array()) return std::vector<Json>(v.begin(), v.end());
  return {v};
}

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

struct BenchRow {
  std::string family;
  Params params;
  std::string params_text;
  SpannerRequest req;
};

std::vector<BenchRow> expand_manifest(const Json& manifest) {
  const Json& runs = manifest.is_array() ? manifest : manifest.at("runs");
  std::vector<BenchRow> rows;
  for (const Json& run : runs) {
    const std::string family = run.at("family").get<std::string>();
    // Cartesian product over parameter values (keys in sorted order).
    std::vector<Params> param_sets = {{}};
    if (run.contains("params")) {
      std::map<std::string, Json> sorted;
      for (auto it = run["params"].begin(); it != run["params"].end(); ++it)
        sorted[it.key()] = it.value();
      for (const auto& [key, values] : sorted) {
        std::vector<Params> next;
        for (const Params& p : param_sets)
          for (const Json& v : as_list(values)) {
            Params q = p;
            q[key] = scalar_text(v);
            next.push_back(std::move(q));
          }
        param_sets = std::move(next);
      }
    }
    auto list_or = [&](const char* key, Json def) {
      return as_list(run.contains(key) ? run[key] : def);
    };
    const auto algos = list_or("algo", "lp");
    const auto ks = list_or("k", 2);
    const auto seeds = list_or("seeds", 0);
    const auto modes = list_or("mode", "tc-spanner");
    const auto providers = list_or("provider", "planar");
    for (const Params& p : param_sets)
      for (const Json& algo : algos)
        for (const Json& k : ks)
          for (const Json& mode : modes)
            for (const Json& provider : providers)
              for (const Json& seed : seeds) {
                BenchRow row;
                row.family = family;
                row.params = p;
                for (const auto& [key, value] : p) {
                  if (!row.params_text.empty()) row.params_text += ";";
                  row.params_text += key + "=" + value;
                }
                row.req.algo = algo.get<std::string>();
                row.req.k = k.get<int>();
                row.req.mode = mode.get<std::string>();
                row.req.provider = provider.get<std::string>();
                row.req.seed = seed.get<uint64_t>();
                row.req.timing = false;
                if (run.contains("rounding"))
                  row.req.rounding = run["rounding"].get<std::string>();
                if (run.contains("cap")) row.req.cap = run["cap"].get<int>();
                rows.push_back(std::move(row));
              }
  }
  return rows;
}

// Generator parameters: bare tokens fill the family's positional slots,
// key=value tokens name them.
Params parse_param_tokens(const std::string& family,
                          const std::vector<std::string>& tokens) {
  static const std::map<std::string, std::vector<std::string>> kSlots = {
      {"line", {"n"}},
      {"tree", {"n", "arity"}},
      {"dag", {"n", "p"}},
      {"planar", {"n"}},
      {"butterfly", {"b", "k"}},
      {"broom", {"left", "d"}},
      {"minrep", {"r", "cluster_size", "active", "superedge_p", "edge_p"}},
      {"hard", {"k", "n"}},
      {"nsc", {"a", "b", "c"}},
      {"2tc-hard", {"n", "k"}},
      {"3nc", {"sets", "universe", "k"}},
  };
  auto it = kSlots.find(family);
  if (it == kSlots.end()) {
    throw Error(ErrorCode::kInvalidArgument, "unknown family " + family);
  }
  Params p;
  size_t slot = 0;
  for (const std::string& t : tokens) {
    auto eq = t.find('=');
    if (eq != std::string::npos) {
      p[t.substr(0, eq)] = t.substr(eq + 1);
    } else {
      if (slot >= it->second.size()) {
        throw Error(ErrorCode::kInvalidArgument,
                    family + ": too many positional parameters");
      }
      p[it->second[slot++]] = t;
    }
  }
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------

Instance GenerateInstance(const std::string& family, const Params& params,
                          uint64_t seed) {
  ParamReader pr(family, params);
  const uint64_t s = DeriveSeed(seed, family);
  Instance inst;
  Json labels = Json::object();
  Json extra = Json::object();
  if (family == "line") {
    inst.graph = gen_line(pr.int32("n"));
  } else if (family == "tree") {
    inst.graph = gen_rooted_tree(pr.int32("n"), pr.int32("arity", "2"), s);
  } else if (family == "dag") {
    inst.graph = gen_random_dag(pr.int32("n"), pr.real("p", "0.1"), s);
  } else if (family == "planar") {
    inst.graph = gen_planar(pr.int32("n"), s);
  } else if (family == "butterfly") {
    Butterfly bf = gen_butterfly(pr.int32("b"), pr.int32("k"));
    inst.graph = bf.graph;
    std::vector<int> strip(bf.graph.n()), index(bf.graph.n());
    for (Vertex v = 0; v < bf.graph.n(); ++v) {
      strip[v] = bf.strip(v);
      index[v] = bf.index(v);
    }
    extra["width"] = bf.width;
    labels["strip"] = strip;
    labels["index"] = index;
  } else if (family == "broom") {
    const int left = pr.int32("left");
    const int d = pr.int32("d");
    inst.graph = gen_broom(left, d);
    std::vector<int> layer(inst.graph.n());
    for (Vertex v = 0; v < inst.graph.n(); ++v)
      layer[v] = v < left ? 1 : v < left + d ? 2 : 3;
    labels["layer"] = layer;
  } else if (family == "minrep") {
    MinRepInstance m = gen_minrep(
        pr.int32("r", "3"), pr.int32("cluster_size", "4"),
        pr.int32("active", "2"), pr.real("superedge_p", "0.5"),
        pr.real("edge_p", "0.5"), s);
    const std::string t = pr.str("transform", "none");
    if (t != "none") m = minrep_transform(parse_transform(t), m,
                                          pr.int32("factor", "2"));
    inst.graph = m.graph();
    Json mj = minrep_json(m);
    labels["cluster"] = mj["cluster"];
    mj.erase("cluster");
    extra["minrep"] = mj;
  } else if (family == "hard") {
    HardInstance h = gen_hard_instance(pr.int32("k", "3"), pr.integer("n"), s);
    inst.graph = h.graph;
    const HardInstanceParams& hp = h.params;
    extra["instance"] = {{"delta", hp.delta},       {"eta", hp.eta},
                         {"zeta", hp.zeta},         {"r", hp.r},
                         {"d_star", hp.d_star},     {"copies", hp.copies},
                         {"group_size", hp.group_size},
                         {"m_target", hp.m_target},
                         {"layer_sizes", hp.layer_sizes}};
    labels["layer"] = h.layer;
    labels["group"] = h.group;
  } else if (family == "nsc") {
    SetCoverInstance sc =
        gen_nice_set_cover(pr.int32("a"), pr.int32("b"), pr.int32("c"), s);
    EdgeList e;
    for (int i = 0; i < sc.a; ++i)
      for (int x : sc.sets[i]) e.push_back({i, sc.a + x});
    inst.graph = Digraph::from_unsorted(sc.a + sc.b, e);
    extra["set_cover"] = {{"variant", std::string(VariantName(sc.variant))},
                          {"a", sc.a},
                          {"b", sc.b},
                          {"c", sc.c},
                          {"block_size", sc.block_size},
                          {"sets", sc.sets}};
    std::vector<int> side(sc.a + sc.b);
    for (int v = 0; v < sc.a + sc.b; ++v) side[v] = v < sc.a ? 1 : 2;
    labels["layer"] = side;
  } else if (family == "2tc-hard") {
    TwoTcHardInstance t =
        gen_2tc_hard_instance(pr.int32("n"), pr.int32("k", "2"), s);
    inst.graph = t.graph;
    extra["instance"] = {{"b", t.b},
                         {"alpha", t.alpha},
                         {"beta", t.beta},
                         {"ancestors_per_set", t.ancestors_per_set},
                         {"sets", t.cover.sets}};
    labels["layer"] = t.layer;
  } else if (family == "3nc") {
    auto sets = parse_int_lists(pr.str("sets", ""));
    auto universe = parse_int_lists(pr.str("universe", ""));
    if (universe.size() != 1) {
      throw Error(ErrorCode::kInvalidArgument,
                  "3nc: universe must be a comma-separated list");
    }
    NodeCoverInstance nc =
        gen_3nodecover_instance(sets, universe[0], pr.int32("k", "2"));
    inst.graph = nc.graph;
    extra["instance"] = {{"num_sets", nc.num_sets},
                         {"num_elements", nc.num_elements},
                         {"sum_set_sizes", nc.sum_set_sizes}};
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown family " + family);
  }
  pr.finish();
  inst.sidecar = {{"schema", kSchemaVersion},
                  {"family", family},
                  {"params", pr.record()},
                  {"seed", seed},
                  {"n", inst.graph.n()},
                  {"m", inst.graph.m()}};
  for (auto it = extra.begin(); it != extra.end(); ++it)
    inst.sidecar[it.key()] = it.value();
  inst.sidecar["labels"] = labels;
  return inst;
}

SpannerRun RunSpanner(const Digraph& g, const SpannerRequest& req) {
  SpannerRun run;
  SpannerResult result;
  Json extra = Json::object();
  std::string mode = "tc-spanner";
  VerifyReport verdict;
  const auto start = std::chrono::steady_clock::now();
  if (req.algo == "lp") {
    SpannerMode m = ParseMode(req.mode);
    mode = std::string(ModeName(m));
    SpannerTask task = make_task(g, m, req.k, req.clients, req.servers);
    LpSamplingOptions opt;
    if (req.rounding != "greedy" && req.rounding != "random") {
      throw Error(ErrorCode::kInvalidArgument,
                  "rounding must be greedy or random");
    }
    opt.greedy = req.rounding == "greedy";
    opt.seed = DeriveSeed(req.seed, "lp");
    LpSamplingReport rep = lp_sampling_spanner(task, opt);
    result = std::move(rep.result);
    extra["rounding"] = req.rounding;
    extra["sample_size"] = rep.sample_size;
    extra["threshold_edges"] = rep.threshold_edges;
    extra["hubs"] = rep.hubs.size();
    extra["repairs"] = rep.repairs;
    if (m == SpannerMode::kTc) {
      verdict = verify_spanner(g, result.edges, req.k);
    } else {
      verdict = verify_pairs(g.n(), result.edges, task.pairs, req.k);
      for (const Edge& e : result.edges) {
        if (!verdict.valid) break;
        if (!std::binary_search(task.allowed.begin(), task.allowed.end(), e)) {
          verdict.valid = false;
          verdict.violation =
              Violation{Violation::Kind::kForeignEdge, e.u, e.v};
        }
      }
    }
  } else {
    if (req.algo == "largek") {
      LargeKReport rep = largek_spanner(g, req.k);
      result = std::move(rep.result);
      extra["k_prime"] = rep.k_prime;
      extra["middle"] = rep.middle.size();
    } else if (req.algo == "line") {
      if (!is_line(g)) {
        throw Error(ErrorCode::kInvalidArgument,
                    "line algorithm needs the path 0 -> 1 -> ... -> n-1");
      }
      result = line_spanner(g.n(), req.k);
    } else if (req.algo == "tree") {
      result = tree_spanner(g, req.k);
    } else if (req.algo == "pathsep") {
      PathsepReport rep =
          pathsep_spanner(g, req.k, ParseProvider(req.provider));
      result = std::move(rep.result);
      extra["provider"] = req.provider;
      extra["max_rounds"] = rep.max_rounds;
      extra["recursion_steps"] = rep.steps.size();
    } else if (req.algo == "exact") {
      ExactOptions opt;
      opt.cap = req.cap;
      ExactSpannerResult ex = exact_sparsest_tc_spanner(g, req.k, opt);
      result.k = req.k;
      result.edges = ex.witness;
      result.stats.algorithm = "exact";
      finalize_stats(g, result);
      extra["nodes"] = ex.nodes;
      extra["optimal"] = true;
    } else {
      throw Error(ErrorCode::kInvalidArgument, "unknown algorithm " + req.algo);
    }
    verdict = verify_spanner(g, result.edges, req.k);
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  run.edges = result.edges;
  run.valid = verdict.valid;
  run.report = {{"schema", kSchemaVersion},
                {"algorithm", result.stats.algorithm.empty()
                                  ? req.algo
                                  : result.stats.algorithm},
                {"mode", mode},
                {"k", req.k},
                {"n", g.n()},
                {"m_input", g.m()},
                {"m_tr", tr_size(g)},
                {"m_spanner", result.edges.size()},
                {"shortcut_count", result.stats.shortcut_count},
                {"valid", verdict.valid},
                {"runtime_ms", req.timing ? rounded_ms(ms) : 0.0},
                {"seed", req.seed}};
  if (!verdict.valid) run.report["violation"] = violation_json(verdict);
  for (auto it = extra.begin(); it != extra.end(); ++it)
    run.report[it.key()] = it.value();
  return run;
}

// ---------------------------------------------------------------------------

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Transitive-closure spanner workbench", "tcspan"};
  app.require_subcommand(1);

  // generate
  std::string family, out_path, format = "edgelist";
  std::vector<std::string> gen_params;
  uint64_t seed = 0;
  auto* gen = app.add_subcommand("generate", "Generate an instance");
  gen->add_option("family", family, "Instance family")->required();
  gen->add_option("params", gen_params,
                  "Parameters: positional values or key=value");
  gen->add_option("--seed", seed, "64-bit seed");
  gen->add_option("--out", out_path,
                  "Output file; the JSON sidecar goes to <out>.json");
  gen->add_option("--format", format, "edgelist, dot or json")
      ->check(CLI::IsMember({"edgelist", "dot", "json"}));

  // spanner / exact share most options.
  std::string in_path, clients_path, servers_path;
  SpannerRequest req;
  bool no_timing = false;
  auto add_run_options = [&](CLI::App* sub) {
    sub->add_option("input", in_path, "Input edge list")->required();
    sub->add_option("--k", req.k, "Stretch bound")->required();
    sub->add_option("--seed", req.seed, "64-bit seed");
    sub->add_option("--out", out_path, "Spanner output file");
    sub->add_option("--format", format, "edgelist, dot or json")
        ->check(CLI::IsMember({"edgelist", "dot", "json"}));
    sub->add_option("--cap", req.cap, "Exact search cap (0: default)");
    sub->add_flag("--no-timing", no_timing, "Report runtime_ms as 0");
  };
  auto* span = app.add_subcommand("spanner", "Build and verify a spanner");
  add_run_options(span);
  span->add_option("--algo", req.algo, "lp, largek, line, tree, pathsep, exact")
      ->check(CLI::IsMember({"lp", "largek", "line", "tree", "pathsep", "exact"}));
  span->add_option("--mode", req.mode,
                   "directed, client-server, k-diameter, tc-spanner (lp)");
  span->add_option("--provider", req.provider, "tree or planar (pathsep)");
  span->add_option("--rounding", req.rounding, "greedy or random (lp)");
  span->add_option("--clients", clients_path, "Client edges (client-server)");
  span->add_option("--servers", servers_path, "Server edges (client-server)");
  auto* exact = app.add_subcommand("exact", "Sparsest k-TC-spanner by search");
  add_run_options(exact);

  // verify
  std::string spanner_path;
  int verify_k = 2;
  auto* ver = app.add_subcommand("verify", "Check a k-TC-spanner");
  ver->add_option("graph", in_path, "Input edge list")->required();
  ver->add_option("spanner", spanner_path, "Spanner edge list")->required();
  ver->add_option("--k", verify_k, "Stretch bound")->required();

  // montest
  std::string function_path, function_kind = "planted";
  double epsilon = 0.25, far = 0;
  int trials = 100;
  auto* mon = app.add_subcommand("montest", "Run the monotonicity tester");
  mon->add_option("--graph", in_path, "Input edge list")->required();
  mon->add_option("--spanner-file", spanner_path,
                  "2-TC-spanner (default: line ladder on paths, else TC)");
  mon->add_option("--function", function_path, "One integer value per line");
  mon->add_option("--function-kind", function_kind,
                  "monotone, decreasing or planted (without --function)")
      ->check(CLI::IsMember({"monotone", "decreasing", "planted"}));
  mon->add_option("--far", far, "Planted farness (default: epsilon)");
  mon->add_option("--epsilon", epsilon, "Distance parameter in (0, 1]");
  mon->add_option("--trials", trials, "Number of trials")
      ->check(CLI::NonNegativeNumber);
  mon->add_option("--seed", seed, "64-bit seed");
  mon->add_option("--out", out_path, "CSV output file");

  // bench
  std::string manifest_path;
  bool timing = false;
  auto* bench = app.add_subcommand("bench", "Run a manifest of experiments");
  bench->add_option("manifest", manifest_path, "JSON manifest")->required();
  bench->add_option("--out", out_path, "CSV output file");
  bench->add_flag("--timing", timing, "Append a runtime_ms column");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (gen->parsed()) {
      Instance inst = GenerateInstance(
          family, parse_param_tokens(family, gen_params), seed);
      std::string body;
      if (format == "edgelist") {
        body = to_edge_list(inst.graph);
      } else if (format == "dot") {
        body = to_dot(inst.graph);
      } else {
        Json j = inst.sidecar;
        Json edges = Json::array();
        for (const Edge& e : inst.graph.edges()) edges.push_back({e.u, e.v});
        j["edges"] = edges;
        body = j.dump(2) + "\n";
      }
      emit(out_path, body, out);
      if (!out_path.empty() && out_path != "-" && format != "json") {
        write_file(out_path + ".json", inst.sidecar.dump(2) + "\n");
      }
      return kExitOk;
    }

    if (span->parsed() || exact->parsed()) {
      if (exact->parsed()) req.algo = "exact";
      Digraph g = read_edge_list_file(in_path);
      if (!clients_path.empty()) req.clients = read_pairs_file(clients_path, g.n());
      if (!servers_path.empty()) req.servers = read_pairs_file(servers_path, g.n());
      req.timing = !no_timing;
      SpannerRun run = RunSpanner(g, req);
      if (!out_path.empty()) {
        emit(out_path, format_edges(format, g, run.edges, run.report), out);
      }
      if (format == "json" && out_path.empty()) {
        out << format_edges(format, g, run.edges, run.report);
      } else {
        out << run.report.dump(2) << "\n";
      }
      if (!run.valid) {
        err << "error: output failed verification\n";
        return kExitFailed;
      }
      return kExitOk;
    }

    if (ver->parsed()) {
      Digraph g = read_edge_list_file(in_path);
      EdgeList h = read_pairs_file(spanner_path, g.n());
      VerifyReport rep = verify_spanner(g, h, verify_k);
      Json j = {{"schema", kSchemaVersion}, {"k", verify_k},
                {"n", g.n()},               {"m_input", g.m()},
                {"m_spanner", h.size()},    {"valid", rep.valid},
                {"violation", violation_json(rep)}};
      out << j.dump(2) << "\n";
      return rep.valid ? kExitOk : kExitFailed;
    }

    if (mon->parsed()) {
      Digraph g = read_edge_list_file(in_path);
      EdgeList h2;
      if (!spanner_path.empty()) {
        h2 = read_pairs_file(spanner_path, g.n());
      } else if (is_line(g)) {
        h2 = line_spanner(g.n(), 2).edges;
      } else {
        h2 = tc_graph(g).edges();
      }
      std::vector<int64_t> values;
      if (!function_path.empty()) {
        std::ifstream in(function_path);
        if (!in) {
          throw Error(ErrorCode::kInvalidArgument,
                      "cannot open " + function_path);
        }
        int64_t x;
        while (in >> x) values.push_back(x);
        if (!in.eof()) {
          throw Error(ErrorCode::kParseError,
                      function_path + ": expected one integer per line");
        }
      } else {
        values.assign(g.n(), 0);
        const auto& order = g.topological_order();
        for (int i = 0; i < g.n(); ++i)
          values[order[i]] = function_kind == "decreasing" ? g.n() - i : i;
        if (function_kind == "planted") {
          values = plant_far_function(g, far > 0 ? far : epsilon, seed).values;
        }
      }
      if (static_cast<int>(values.size()) != g.n()) {
        throw Error(ErrorCode::kInvalidArgument,
                    "function has " + std::to_string(values.size()) +
                        " values for " + std::to_string(g.n()) + " vertices");
      }
      MonotonicityTester tester(g, h2);
      std::ostringstream csv;
      csv << "trial,verdict,samples,queries,violated_u,violated_v\n";
      for (int t = 0; t < trials; ++t) {
        Rng rng(DeriveSeed(seed, "montest/" + std::to_string(t)));
        FunctionOracle f(values);
        TesterReport rep = tester.run(f, epsilon, rng);
        csv << t << "," << (rep.accept ? "accept" : "reject") << ","
            << rep.samples << "," << rep.queries << ",";
        if (rep.violated) csv << rep.violated->u << "," << rep.violated->v;
        else csv << ",";
        csv << "\n";
      }
      emit(out_path, csv.str(), out);
      return kExitOk;
    }

    if (bench->parsed()) {
      std::ifstream in(manifest_path);
      if (!in) {
        throw Error(ErrorCode::kInvalidArgument, "cannot open " + manifest_path);
      }
      Json manifest;
      try {
        manifest = Json::parse(in);
      } catch (const Json::exception& e) {
        throw Error(ErrorCode::kParseError, manifest_path + ": " + e.what());
      }
      std::vector<BenchRow> rows;
      try {
        rows = expand_manifest(manifest);
      } catch (const Json::exception& e) {
        throw Error(ErrorCode::kParseError, manifest_path + ": " + e.what());
      }
      std::ostringstream csv;
      csv << "row,family,params,algo,mode,k,seed,n,m_input,m_spanner,"
             "shortcut_count,valid,status,error";
      if (timing) csv << ",runtime_ms";
      csv << "\n";
      bool all_ok = true;
      for (size_t i = 0; i < rows.size(); ++i) {
        BenchRow& row = rows[i];
        row.req.timing = timing;
        std::string status = "ok", message;
        SpannerRun run;
        Digraph g;
        try {
          g = GenerateInstance(row.family, row.params, row.req.seed).graph;
          run = RunSpanner(g, row.req);
          if (!run.valid) status = "invalid";
        } catch (const Error& e) {
          status = "error";
          message = error_text(e);
        }
        all_ok = all_ok && status == "ok";
        const bool ran = status != "error";
        csv << i << "," << csv_field(row.family) << ","
            << csv_field(row.params_text) << "," << row.req.algo << ","
            << row.req.mode << "," << row.req.k << "," << row.req.seed << ",";
        if (ran) {
          csv << g.n() << "," << g.m() << "," << run.report["m_spanner"] << ","
              << run.report["shortcut_count"] << ","
              << (run.valid ? "true" : "false");
        } else {
          csv << ",,,,";
        }
        csv << "," << status << "," << csv_field(message);
        if (timing) {
          csv << ",";
          if (ran) csv << run.report["runtime_ms"].get<double>();
        }
        csv << "\n";
      }
      emit(out_path, csv.str(), out);
      return all_ok ? kExitOk : kExitFailed;
    }
  } catch (const Error& e) {
    err << "error: " << error_text(e) << "\n";
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace tcspan::cli
