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

// Acceptance suite: one PASS/FAIL line per criterion. Optional arguments
// select criteria by number.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "tcspan/approx.hpp"
#include "tcspan/common.hpp"
#include "tcspan/constructions.hpp"
#include "tcspan/exact.hpp"
#include "tcspan/frac.hpp"
#include "tcspan/generators.hpp"
#include "tcspan/graph.hpp"
#include "tcspan/mono.hpp"
#include "test_util.hpp"

using namespace tcspan;
using namespace tcspan::testing;

namespace {

class Check {
 public:
  void expect(bool cond, const std::string& what) {
    ++count_;
    if (!cond && ok_) {
      ok_ = false;
      failure_ = what;
    }
  }
  void note(const std::string& s) {
    if (!notes_.empty()) notes_ += "; ";
    notes_ += s;
  }
  bool ok() const { return ok_; }
  int64_t count() const { return count_; }
  const std::string& failure() const { return failure_; }
  const std::string& notes() const { return notes_; }

 private:
  bool ok_ = true;
  int64_t count_ = 0;
  std::string failure_;
  std::string notes_;
};

std::string fmt(double x, int prec = 3) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(prec) << x;
  return os.str();
}

std::string edges_str(const EdgeList& e) {
  std::string s;
  for (const Edge& x : e) s += "(" + std::to_string(x.u) + "," +
                               std::to_string(x.v) + ")";
  return s;
}

bool is_line_graph(const Digraph& g) {
  if (g.m() != std::max(0, g.n() - 1)) return false;
  for (const Edge& e : g.edges())
    if (e.v != e.u + 1) return false;
  return true;
}

// ---------------------------------------------------------------------------

void criterion1(Check& c) {
  int64_t graphs = 0, runs = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const EdgeList& e : all_dags_up_to_iso(n)) {
      ++graphs;
      Digraph g(n, e);
      for (int k : {2, 3}) {
        const std::string tag =
            "n=" + std::to_string(n) + " k=" + std::to_string(k) + " " +
            edges_str(e);
        ExactSpannerResult ex = exact_sparsest_tc_spanner(g, k);
        c.expect(verify_spanner(g, ex.witness, k).valid,
                 "exact witness invalid " + tag);
        c.expect(naive_is_valid_spanner(n, e, ex.witness, k),
                 "exact witness rejected by naive check " + tag);
        c.expect(ex.size == naive_min_tc_spanner(n, e, k),
                 "exact size differs from enumeration " + tag);
        auto judge = [&](const std::string& algo, const EdgeList& h) {
          ++runs;
          c.expect(verify_spanner(g, h, k).valid && naive_is_valid_spanner(n, e, h, k),
                   algo + " invalid " + tag);
          c.expect(static_cast<int64_t>(h.size()) >= ex.size,
                   algo + " below the optimum " + tag);
        };
        SpannerTask task = make_task(g, SpannerMode::kTc, k);
        LpSamplingOptions greedy;
        judge("lp-greedy", lp_sampling_spanner(task, greedy).result.edges);
        LpSamplingOptions random;
        random.greedy = false;
        random.seed = DeriveSeed(graphs * 7 + k, "acceptance");
        judge("lp-random", lp_sampling_spanner(task, random).result.edges);
        judge("pathsep-planar",
              pathsep_spanner(g, k, SeparatorProvider::kPlanar).result.edges);
        try {
          judge("pathsep-tree",
                pathsep_spanner(g, k, SeparatorProvider::kTree).result.edges);
        } catch (const Error& err) {
          c.expect(err.code() == ErrorCode::kNotATree, "pathsep-tree: " +
                                                           std::string(err.what()));
        }
        try {
          judge("tree", tree_spanner(g, k).edges);
        } catch (const Error& err) {
          c.expect(err.code() == ErrorCode::kNotATree,
                   "tree: " + std::string(err.what()));
        }
        if (is_line_graph(g)) judge("line", line_spanner(n, k).edges);
      }
      // The large-k algorithm starts at k = 6.
      ExactSpannerResult ex6 = exact_sparsest_tc_spanner(g, 6);
      EdgeList h6 = largek_spanner(g, 6).result.edges;
      ++runs;
      c.expect(verify_spanner(g, h6, 6).valid, "largek invalid " + edges_str(e));
      c.expect(static_cast<int64_t>(h6.size()) >= ex6.size,
               "largek below the optimum " + edges_str(e));
    }
  }
  c.note(std::to_string(graphs) + " DAGs up to isomorphism, " +
         std::to_string(runs) + " algorithm runs");
}

void criterion2(Check& c) {
  const int expected[] = {2, 4, 6};
  for (int n = 3; n <= 5; ++n) {
    int64_t s = exact_sparsest_tc_spanner(gen_line(n), 2).size;
    c.expect(s == expected[n - 3], "S_2(L_" + std::to_string(n) + ") = " +
                                       std::to_string(s));
    c.expect(naive_min_tc_spanner(n, line_edges(n), 2) == expected[n - 3],
             "enumeration disagrees on L_" + std::to_string(n));
  }
  const std::vector<std::vector<int>> d = {{1, 2}, {3}};
  NodeCoverInstance inst = gen_3nodecover_instance(d, {1, 2, 3}, 2);
  const int64_t s2 = exact_sparsest_tc_spanner(inst.graph, 2).size;
  SetCoverInstance sc;
  sc.a = 2;
  sc.b = 3;
  sc.sets = {{0, 1}, {2}};
  const int64_t opt3nc = exact_set_cover(sc).size;
  const int64_t formula = opt3nc + 2 * static_cast<int64_t>(d.size()) +
                          inst.sum_set_sizes;
  c.expect(s2 == 9, "node-cover instance S_2 = " + std::to_string(s2));
  c.expect(s2 == formula, "formula gives " + std::to_string(formula));
  c.expect(naive_min_tc_spanner(inst.graph.n(), inst.graph.edges(), 2) == 9,
           "enumeration disagrees on the node-cover instance");
  c.note("S_2(L_3..L_5) = 2, 4, 6; node-cover S_2 = " + std::to_string(s2) +
         " = " + std::to_string(opt3nc) + " + 2*2 + " +
         std::to_string(inst.sum_set_sizes));
}

void criterion3(Check& c) {
  double worst = 0;
  for (int j = 1; j <= 16; ++j) {
    const int n = 1 << j;
    SpannerResult r = line_spanner(n, 2);
    c.expect(naive_line_ok(n, r.edges, 2), "k=2 invalid at n=" + std::to_string(n));
    c.expect(static_cast<int64_t>(r.edges.size()) <= int64_t{n} * j,
             "k=2 size " + std::to_string(r.edges.size()) + " above n log n at n=" +
                 std::to_string(n));
    worst = std::max(worst, static_cast<double>(r.edges.size()) / (double(n) * j));
  }
  double lo = 1e300, hi = 0;
  for (int j = 8; j <= 16; ++j) {
    const int n = 1 << j;
    SpannerResult r = line_spanner(n, 3);
    c.expect(naive_line_ok(n, r.edges, 3), "k=3 invalid at n=" + std::to_string(n));
    const double ratio = static_cast<double>(r.edges.size()) /
                         (n * std::log2(std::log2(static_cast<double>(n))));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  c.expect(hi <= 4 * lo, "k=3 ratio spread " + fmt(hi / lo));
  c.note("k=2 max size/(n log n) = " + fmt(worst) + "; k=3 ratio in [" + fmt(lo) +
         ", " + fmt(hi) + "], spread " + fmt(hi / lo) + "x");
}

void criterion4(Check& c) {
  std::mt19937_64 rng(2026);
  int exact_matches = 0;
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int k = 1 + static_cast<int>(rng() % 4);
    EdgeList e;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && (t % 4 == 0 || u < v) && rng() % 100 < 45) e.push_back({u, v});
    if (e.empty()) e.push_back({0, 1});
    Digraph g(n, e);
    std::vector<double> x(g.m());
    for (double& v : x) v = static_cast<double>(rng() % 9) / 16;
    Edge p{static_cast<Vertex>(rng() % n), static_cast<Vertex>(rng() % n)};
    if (p.u == p.v) p.v = (p.u + 1) % n;
    WalkMinima b = naive_walk_minima(n, g.edges(), p, x, k);
    SeparationOutcome out = separation_oracle(g, {p}, x, k);
    bool same = walk_min_sum(g, p, x, k) == b.lhs;
    if (b.lhs >= 1 - 1e-6) {
      same = same && out.kind == SeparationOutcome::Kind::kFeasible;
    } else {
      same = same && out.kind == SeparationOutcome::Kind::kPair && out.lhs == b.lhs;
      for (int id = 0; same && id < g.m(); ++id)
        same = out.coefficients[id] == b.coeff[id];
    }
    c.expect(same, "separation oracle differs on triple " + std::to_string(t));
    exact_matches += same;
  }
  Digraph tc3 = tc_graph(gen_line(3));
  const double l3 = solve_fractional(tc3, tc3.edges(), 2).objective;
  c.expect(std::abs(l3 - 2.0) <= 1e-6, "TC(L_3) fractional optimum " + fmt(l3, 9));

  int bounded = 0;
  for (int n = 2; n <= 5; ++n)
    for (const EdgeList& e : all_dags_up_to_iso(n))
      for (int k : {2, 3}) {
        Digraph g(n, e);
        Digraph tc = tc_graph(g);
        const double f = solve_fractional(tc, tc.edges(), k).objective;
        const int64_t opt = exact_sparsest_tc_spanner(g, k).size;
        c.expect(f <= opt + 1e-6, "fractional above integer optimum on " +
                                      edges_str(e));
        ++bounded;
      }
  double worst = 0;
  for (int t = 0; t < 50; ++t) {
    const int n = 4 + t % 4;
    const int k = 2 + t % 2;
    Digraph g(n, random_dag_edges(n, 0.5, rng));
    Digraph tc = tc_graph(g);
    FracOptions ex, cp;
    ex.engine = FracOptions::Engine::kExplicit;
    cp.engine = FracOptions::Engine::kCuttingPlane;
    const double a = solve_fractional(tc, tc.edges(), k, ex).objective;
    const double b = solve_fractional(tc, tc.edges(), k, cp).objective;
    worst = std::max(worst, std::abs(a - b));
    c.expect(std::abs(a - b) <= 2e-6, "engines disagree by " + fmt(std::abs(a - b), 9));
  }
  c.note(std::to_string(exact_matches) + "/200 oracle triples exact; TC(L_3) = " +
         fmt(l3, 9) + "; " + std::to_string(bounded) +
         " instances below the integer optimum; max engine gap " + fmt(worst, 9));
}

void criterion5(Check& c) {
  int valid = 0, total = 0, landmark_runs = 0;
  int64_t landmark_checks = 0;
  std::mt19937_64 band(77);
  for (int i = 0; i < 100; ++i) {
    Digraph g;
    if (i % 2 == 0) {
      const double p = i % 3 == 0 ? 0.01 : i % 3 == 1 ? 0.02 : 0.04;
      g = gen_random_dag(200, p, 1000 + i);
    } else {
      // Banded DAG under a random relabeling: deep enough for k = 14 and 20.
      std::vector<Vertex> perm(200);
      for (int v = 0; v < 200; ++v) perm[v] = v;
      std::shuffle(perm.begin(), perm.end(), band);
      EdgeList e;
      for (int u = 0; u < 200; ++u)
        for (int v = u + 1; v < std::min(200, u + 9); ++v)
          if (band() % 100 < (v == u + 1 ? 70u : 15u)) e.push_back({perm[u], perm[v]});
      g = Digraph::from_unsorted(200, e);
    }
    for (int k : {6, 14, 20}) {
      LargeKReport r = largek_spanner(g, k);
      ++total;
      landmark_runs += !r.reduction_only;
      const bool ok = verify_spanner(g, r.result.edges, k).valid;
      valid += ok;
      c.expect(ok, "invalid on DAG " + std::to_string(i) + " k=" + std::to_string(k));
      const int64_t bound =
          (4 * int64_t{r.reduced.n()} + r.k_prime - 1) / r.k_prime;
      for (int64_t s : r.landmark_sizes) {
        ++landmark_checks;
        c.expect(s <= bound, "landmark set of size " + std::to_string(s) +
                                 " above " + std::to_string(bound));
      }
    }
  }
  std::mt19937_64 rng(55);
  int strong = 0;
  for (int i = 0; i < 20; ++i) {
    const int n = 20 + 9 * i;
    std::vector<int> perm(n);
    for (int v = 0; v < n; ++v) perm[v] = v;
    std::shuffle(perm.begin(), perm.end(), rng);
    EdgeList e;
    for (int v = 0; v < n; ++v) e.push_back({perm[v], perm[(v + 1) % n]});
    for (int t = 0; t < 2 * n; ++t) {
      Vertex a = static_cast<Vertex>(rng() % n), b = static_cast<Vertex>(rng() % n);
      if (a != b) e.push_back({a, b});
    }
    Digraph g = Digraph::from_unsorted(n, e);
    LargeKReport r = largek_spanner(g, 6);
    c.expect(verify_spanner(g, r.result.edges, 6).valid,
             "invalid on strongly connected input " + std::to_string(i));
    c.expect(static_cast<int64_t>(r.result.edges.size()) <= 2 * n,
             "strongly connected output above 2n");
    ++strong;
  }
  c.note(std::to_string(valid) + "/" + std::to_string(total) + " valid (" +
         std::to_string(landmark_runs) + " through landmarks); " +
         std::to_string(landmark_checks) + " landmark sets within bound; " +
         std::to_string(strong) + " strongly connected inputs <= 2n");
}

void criterion6(Check& c) {
  const int sizes[] = {500, 1000, 5000};
  double worst = 0;
  int valid = 0, rounds = 0;
  for (int i = 0; i < 20; ++i) {
    const int n = sizes[i % 3];
    Digraph g = gen_planar(n, 600 + i);
    PathsepReport r = pathsep_spanner(g, 2, SeparatorProvider::kPlanar);
    const bool ok = verify_spanner(g, r.result.edges, 2).valid;
    valid += ok;
    c.expect(ok, "invalid on planar DAG " + std::to_string(i));
    const double l = std::log2(static_cast<double>(n));
    const double constant = static_cast<double>(r.result.edges.size()) / (n * l * l);
    worst = std::max(worst, constant);
    c.expect(constant <= 8, "size above 8 n log^2 n on planar DAG " + std::to_string(i));
    for (const PathsepStep& s : r.steps) {
      ++rounds;
      c.expect(2 * s.largest_after <= s.component_size,
               "component of " + std::to_string(s.component_size) +
                   " left a piece of " + std::to_string(s.largest_after));
    }
  }
  c.note(std::to_string(valid) + "/20 valid; measured constant max size/(n log^2 n) = " +
         fmt(worst) + "; " + std::to_string(rounds) + " separations all halving");
}

void criterion7(Check& c) {
  // Samples ceil(4|H2| q / (p n)) for eps = p/q.
  auto expected_queries = [](int64_t h, int64_t n, int64_t p, int64_t q) {
    return 2 * ((4 * h * q + p * n - 1) / (p * n));
  };
  Digraph l100 = gen_line(100);
  MonotonicityTester t100(l100, line_spanner(100, 2).edges);
  const int64_t h100 = static_cast<int64_t>(t100.spanner().size());
  std::vector<int64_t> down(100), up(100);
  for (int i = 0; i < 100; ++i) {
    down[i] = 100 - i;
    up[i] = i;
  }
  Rng rng(DeriveSeed(7, "acceptance-mono"));
  int rejects = 0, accepts = 0;
  for (int t = 0; t < 200; ++t) {
    FunctionOracle f(down);
    TesterReport r = t100.run(f, 0.5, rng);
    rejects += !r.accept;
    c.expect(r.queries == expected_queries(h100, 100, 1, 2) && f.queries() == r.queries,
             "query count " + std::to_string(r.queries));
    FunctionOracle g(up);
    TesterReport a = t100.run(g, 0.5, rng);
    accepts += a.accept;
    c.expect(a.queries == expected_queries(h100, 100, 1, 2), "query count (monotone)");
  }
  c.expect(rejects == 200, "decreasing reject rate " + std::to_string(rejects) + "/200");
  c.expect(accepts == 200, "monotone accept rate " + std::to_string(accepts) + "/200");

  Digraph l1000 = gen_line(1000);
  MonotonicityTester t1000(l1000, line_spanner(1000, 2).edges);
  const int64_t h1000 = static_cast<int64_t>(t1000.spanner().size());
  PlantedFunction pf = plant_far_function(l1000, 0.25, 11);
  c.expect(static_cast<int>(violation_matching(l1000, pf.values).size()) >= 125,
           "planted function has a matching below eps n / 2");
  int far_rejects = 0, mono_accepts = 0;
  for (int t = 0; t < 500; ++t) {
    FunctionOracle f(pf.values);
    TesterReport r = t1000.run(f, 0.25, rng);
    far_rejects += !r.accept;
    c.expect(r.queries == expected_queries(h1000, 1000, 1, 4), "query count (L_1000)");
    std::vector<int64_t> id(1000);
    for (int i = 0; i < 1000; ++i) id[i] = i;
    FunctionOracle m(id);
    mono_accepts += t1000.run(m, 0.25, rng).accept;
  }
  const double rate = far_rejects / 500.0;
  c.expect(rate >= 2.0 / 3, "planted reject rate " + fmt(rate));
  c.expect(mono_accepts == 500, "monotone rejected on L_1000");
  c.note("L_100: reject 200/200, accept 200/200, " +
         std::to_string(expected_queries(h100, 100, 1, 2)) +
         " queries; L_1000 planted: reject rate " + fmt(rate) + ", " +
         std::to_string(expected_queries(h1000, 1000, 1, 4)) + " queries");
}

void criterion8(Check& c) {
  int pairs = 0;
  for (int b = 2; b <= 3; ++b)
    for (int k = 1; k <= 3; ++k) {
      Butterfly bf = gen_butterfly(b, k);
      for (int i = 0; i < bf.width; ++i)
        for (int j = 0; j < bf.width; ++j) {
          ++pairs;
          const uint64_t walks =
              naive_count_walks(bf.graph.n(), bf.graph.edges(), bf.vertex(1, i),
                                bf.vertex(k + 1, j), k);
          c.expect(walks == 1, "butterfly b=" + std::to_string(b) +
                                   " k=" + std::to_string(k) + " pair with " +
                                   std::to_string(walks) + " paths");
        }
    }
  int laws = 0;
  ExactOptions big;
  big.cap = 64;
  for (uint64_t seed = 0; seed < 12; ++seed) {
    MinRepInstance g = gen_minrep(2, 2, 1 + seed % 2, 0.7, 0.6, seed);
    const int64_t opt = exact_rep_cover(g).size;
    auto law = [&](Transform t, int factor, int64_t mult, const char* name) {
      const int64_t got = exact_rep_cover(minrep_transform(t, g, factor), big).size;
      ++laws;
      c.expect(got == mult * opt, std::string(name) + " gives " + std::to_string(got) +
                                      " for base " + std::to_string(opt));
    };
    law(Transform::kT1, 3, 3, "T1");
    law(Transform::kT2, 2, 1, "T2");
    law(Transform::kT3, 2, 1, "T3");
    law(Transform::kT4, 2, 1, "T4");
    law(Transform::kT5, 2, 4, "T5");
  }
  int spanners = 0;
  for (uint64_t seed = 0; seed < 4; ++seed) {
    const int k = 3;
    HardInstance h = gen_hard_instance(k, 16, seed);
    std::vector<Vertex> cover;
    for (int v : exact_rep_cover(h.base).witness) cover.push_back(v);
    RepCoverSpanner rc = rep_cover_to_spanner(h, cover);
    ++spanners;
    c.expect(verify_spanner(h.graph, rc.result.edges, k).valid,
             "rep-cover spanner invalid, seed " + std::to_string(seed));
    for (const Edge& e : rc.result.edges) {
      if (h.graph.has_edge(e.u, e.v)) continue;
      const int span = h.layer[e.v] - h.layer[e.u];
      const int from = h.layer[e.u];
      c.expect(span == 2 && (from == k - 2 || from == k + 1),
               "shortcut of type " + std::to_string(span) + "&" + std::to_string(from));
    }
  }
  c.note(std::to_string(pairs) + " butterfly pairs with a unique path; " +
         std::to_string(laws) + " transform laws; " + std::to_string(spanners) +
         " rep-cover spanners valid with types 2&1, 2&4");
}

void criterion9(Check& c) {
  ExactOptions opt;
  opt.cap = 128;
  opt.lex_least = false;
  std::string values;
  for (uint64_t seed = 0; seed < 10; ++seed) {
    TwoTcHardInstance h = gen_2tc_hard_instance(4, 2, seed);
    ExactSpannerResult s = exact_sparsest_tc_spanner(h.graph, 2, opt);
    const int64_t nsc = exact_set_cover(h.cover).size;
    c.expect(verify_spanner(h.graph, s.witness, 2).valid, "witness invalid");
    const int64_t lhs = s.size - h.graph.m();
    const int64_t rhs = nsc * h.ancestors_per_set;
    c.expect(lhs == rhs, "seed " + std::to_string(seed) + ": S_2 - |G| = " +
                             std::to_string(lhs) + ", OPT_NSC x ancestors = " +
                             std::to_string(rhs));
    if (!values.empty()) values += ",";
    values += std::to_string(lhs);
  }
  c.note("S_2 - |G| over 10 instances: " + values + " (exact search cap 128)");
}

#ifndef TCSPAN_CLI
#define TCSPAN_CLI "tcspan"
#endif

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void criterion10(Check& c) {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() /
                        ("tcspan_acceptance_" + std::to_string(::getpid()));
  const std::string cli = TCSPAN_CLI;
  const std::vector<std::string> script = {
      "generate line 64 --seed 5 --out line.txt",
      "generate tree 80 3 --seed 5 --out tree.txt",
      "generate dag 40 0.1 --seed 5 --out dag.txt",
      "generate planar 300 --seed 5 --out planar.txt",
      "generate butterfly 3 2 --seed 5 --out bf.txt",
      "generate broom 3 2 --seed 5 --out broom.txt",
      "generate minrep 3 4 2 --seed 5 --out minrep.txt",
      "generate hard k=3 n=16 --seed 5 --out hard.txt",
      "generate nsc 4 8 2 --seed 5 --out nsc.txt",
      "generate 2tc-hard 4 2 --seed 5 --out tc2.txt",
      "generate 3nc 'sets=1,2;3' universe=1,2,3 k=2 --seed 5 --out nc.txt",
      "spanner dag.txt --algo lp --k 2 --no-timing --out lp-greedy.txt",
      "spanner dag.txt --algo lp --rounding random --seed 9 --k 3 --no-timing "
      "--out lp-random.txt",
      "spanner planar.txt --algo pathsep --k 2 --no-timing --out pathsep.txt",
      "spanner dag.txt --algo largek --k 6 --no-timing --out largek.txt",
      "spanner tree.txt --algo tree --k 3 --no-timing --out tree-h.txt",
      "spanner line.txt --algo line --k 4 --no-timing --out line-h.json "
      "--format json",
      "exact nc.txt --k 2 --no-timing --out nc-h.txt",
      "montest --graph line.txt --epsilon 0.25 --trials 50 --seed 3",
      "bench manifest.json",
  };
  const std::string manifest =
      R"({"runs": [{"family": "line", "params": {"n": [8, 16]},
                    "algo": ["line", "lp"], "k": 2},
                   {"family": "dag", "params": {"n": 30, "p": 0.1},
                    "algo": "lp", "rounding": "random", "k": 2, "seeds": [1, 2]},
                   {"family": "planar", "params": {"n": 100}, "algo": "pathsep",
                    "k": 2, "seeds": [4]}]})";
  std::vector<std::map<std::string, std::string>> outputs;
  for (int run = 0; run < 2; ++run) {
    const fs::path dir = root / ("run" + std::to_string(run));
    fs::create_directories(dir);
    std::ofstream(dir / "manifest.json") << manifest;
    for (size_t i = 0; i < script.size(); ++i) {
      const std::string cmd = "cd '" + dir.string() + "' && '" + cli + "' " +
                              script[i] + " > stdout" + std::to_string(i) +
                              ".txt 2> stderr" + std::to_string(i) + ".txt";
      const int status = std::system(cmd.c_str());
      c.expect(status == 0, "command failed: " + script[i]);
    }
    std::map<std::string, std::string> files;
    for (const auto& entry : fs::directory_iterator(dir))
      files[entry.path().filename().string()] = slurp(entry.path());
    outputs.push_back(std::move(files));
  }
  c.expect(outputs[0].size() == outputs[1].size(), "different file sets");
  int compared = 0;
  for (const auto& [name, body] : outputs[0]) {
    auto it = outputs[1].find(name);
    c.expect(it != outputs[1].end() && it->second == body, name + " differs");
    ++compared;
  }
  fs::remove_all(root);
  c.note(std::to_string(compared) + " files byte-identical across two executions of " +
         std::to_string(script.size()) + " commands");
}

struct Criterion {
  int id;
  const char* title;
  std::function<void(Check&)> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "oracle equivalence on all DAGs up to 5 vertices", criterion1},
      {2, "named exact values", criterion2},
      {3, "line spanner bounds", criterion3},
      {4, "LP machinery", criterion4},
      {5, "large-k pipeline", criterion5},
      {6, "path-separable pipeline on planar DAGs", criterion6},
      {7, "monotonicity tester", criterion7},
      {8, "generator structure", criterion8},
      {9, "2-TC hard instance relation", criterion9},
      {10, "determinism", criterion10},
  };
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  bool all_pass = true;
  for (const Criterion& cr : all) {
    if (!wanted.empty() && !wanted.count(cr.id)) continue;
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double sec = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - start).count();
    all_pass = all_pass && c.ok();
    std::cout << "criterion " << cr.id << ": " << (c.ok() ? "PASS" : "FAIL")
              << "  " << cr.title << " [" << c.count() << " checks, "
              << fmt(sec, 1) << " s]";
    if (!c.ok()) std::cout << " first failure: " << c.failure();
    if (!c.notes().empty()) std::cout << " (" << c.notes() << ")";
    std::cout << std::endl;
  }
  return all_pass ? 0 : 1;
}
