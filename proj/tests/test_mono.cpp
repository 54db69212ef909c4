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

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "doctest.h"
#include "tcspan/common.hpp"
#include "tcspan/constructions.hpp"
#include "tcspan/generators.hpp"
#include "tcspan/graph.hpp"
#include "tcspan/mono.hpp"
#include "test_util.hpp"

using namespace tcspan;
using namespace tcspan::testing;

namespace {

std::vector<int64_t> iota_values(int n, int64_t step) {
  std::vector<int64_t> v(n);
  for (int i = 0; i < n; ++i) v[i] = step * i;
  return v;
}

// n minus the longest non-decreasing subsequence.
int line_distance(const std::vector<int64_t>& f) {
  std::vector<int64_t> tails;
  for (int64_t x : f) {
    auto it = std::upper_bound(tails.begin(), tails.end(), x);
    if (it == tails.end()) tails.push_back(x);
    else *it = x;
  }
  return static_cast<int>(f.size() - tails.size());
}

// Smallest changed set whose reassignment (max of kept predecessors) yields a
// monotone function.
int naive_distance(int n, const EdgeList& edges, const std::vector<int64_t>& f) {
  auto r = naive_reach(n, edges);
  int64_t lo = *std::min_element(f.begin(), f.end());
  int best = n;
  for (uint32_t changed = 0; changed < (1u << n); ++changed) {
    int c = __builtin_popcount(changed);
    if (c >= best) continue;
    std::vector<int64_t> g = f;
    for (int v = 0; v < n; ++v) {
      if (!(changed >> v & 1)) continue;
      g[v] = lo;
      for (int u = 0; u < n; ++u)
        if (!(changed >> u & 1) && r[u][v]) g[v] = std::max(g[v], f[u]);
    }
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      for (int v = 0; v < n && ok; ++v)
        if (u != v && r[u][v] && g[u] > g[v]) ok = false;
    if (ok) best = c;
  }
  return best;
}

// TR plus a random subset of TC, completed with every pair still farther
// than two hops.
EdgeList random_2spanner(int n, const EdgeList& g, std::mt19937_64& rng) {
  auto tc = naive_tc_edges(n, g);
  EdgeList h = transitive_reduction(Digraph::from_unsorted(n, g)).edges();
  std::bernoulli_distribution coin(0.3);
  for (const Edge& e : tc)
    if (coin(rng)) h.push_back(e);
  normalize_edges(h);
  auto d = naive_dist(n, h);
  for (const Edge& e : tc)
    if (d[e.u][e.v] > 2) h.push_back(e);
  normalize_edges(h);
  return h;
}

// Maximum bipartite matching between matched pairs and violated H2 edges on
// their paths of length <= 2.
int injection_size(int n, const EdgeList& h, const EdgeList& m,
                   const std::vector<int64_t>& f) {
  std::vector<std::vector<bool>> in_h(n, std::vector<bool>(n, false));
  for (const Edge& e : h) in_h[e.u][e.v] = true;
  auto id = [n](int u, int v) { return u * n + v; };
  std::vector<std::vector<int>> cand(m.size());
  for (size_t i = 0; i < m.size(); ++i) {
    auto [a, b] = m[i];
    if (in_h[a][b] && f[a] > f[b]) cand[i].push_back(id(a, b));
    for (int w = 0; w < n; ++w) {
      if (!in_h[a][w] || !in_h[w][b]) continue;
      if (f[a] > f[w]) cand[i].push_back(id(a, w));
      if (f[w] > f[b]) cand[i].push_back(id(w, b));
    }
  }
  std::vector<int> owner(n * n, -1);
  int size = 0;
  for (size_t i = 0; i < m.size(); ++i) {
    std::vector<bool> seen(n * n, false);
    std::function<bool(int)> augment = [&](int p) {
      for (int e : cand[p]) {
        if (seen[e]) continue;
        seen[e] = true;
        if (owner[e] < 0 || augment(owner[e])) {
          owner[e] = p;
          return true;
        }
      }
      return false;
    };
    if (augment(static_cast<int>(i))) ++size;
  }
  return size;
}

int violated_count(const EdgeList& h, const std::vector<int64_t>& f) {
  int c = 0;
  for (const Edge& e : h) c += f[e.u] > f[e.v];
  return c;
}

}  // namespace

TEST_CASE("function oracle counts every access") {
  FunctionOracle f({3, 1, 2});
  CHECK(f.n() == 3);
  CHECK(f(0) == 3);
  CHECK(f(2) == 2);
  CHECK(f(2) == 2);
  CHECK(f.queries() == 3);
  CHECK(f.values()[1] == 1);
  CHECK(f.queries() == 3);
  f.reset_queries();
  CHECK(f.queries() == 0);
}

TEST_CASE("distance to monotone examples") {
  Digraph l2 = gen_line(2);
  CHECK(distance_to_monotone_exact(l2, {1, 0}) == 1);
  CHECK(distance_to_monotone_exact(gen_line(6), iota_values(6, 1)) == 0);
  // Every pair of a decreasing sequence is violated, so only one point stays.
  CHECK(distance_to_monotone_exact(gen_line(6), iota_values(6, -1)) == 5);
  CHECK(distance_to_monotone_exact(Digraph(0, {}), {}) == 0);
  CHECK_THROWS_AS(distance_to_monotone_exact(l2, {1}), Error);
  try {
    distance_to_monotone_exact(gen_line(19), iota_values(19, 1));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kTooLarge);
  }
  CHECK(distance_to_monotone_exact(gen_line(19), iota_values(19, 1), 19) == 0);
}

TEST_CASE("distance to monotone against independent oracles") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + trial % 12;
    std::vector<int64_t> f(n);
    for (auto& x : f) x = static_cast<int64_t>(rng() % 5);
    CHECK(distance_to_monotone_exact(gen_line(n), f) == line_distance(f));
  }
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + trial % 7;
    EdgeList e = random_dag_edges(n, 0.35, rng);
    Digraph g = Digraph::from_unsorted(n, e);
    std::vector<int64_t> f(n);
    for (auto& x : f) x = static_cast<int64_t>(rng() % 4);
    int d = distance_to_monotone_exact(g, f);
    CHECK(d == naive_distance(n, e, f));
    auto m = violation_matching(g, f);
    CHECK(2 * static_cast<int>(m.size()) >= d);
    CHECK(static_cast<int>(m.size()) <= d);
    DistanceBound b = distance_to_monotone(g, f);
    CHECK(b.exact);
    CHECK(b.value == d);
  }
  DistanceBound big = distance_to_monotone(gen_line(40), iota_values(40, -1));
  CHECK_FALSE(big.exact);
  CHECK(big.value == 20);
}

TEST_CASE("violation matching examples") {
  CHECK(violation_matching(gen_line(5), iota_values(5, 1)).empty());
  CHECK(violation_matching(gen_line(4), iota_values(4, -1)) ==
        EdgeList{{0, 1}, {2, 3}});
  CHECK(violation_matching(gen_line(4), {0, 2, 1, 3}) == EdgeList{{1, 2}});
}

TEST_CASE("violation matching is maximal") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 3 + trial % 10;
    Digraph g = Digraph::from_unsorted(n, random_dag_edges(n, 0.3, rng));
    std::vector<int64_t> f(n);
    for (auto& x : f) x = static_cast<int64_t>(rng() % 6);
    auto m = violation_matching(g, f);
    std::vector<bool> used(n, false);
    for (const Edge& e : m) {
      CHECK(f[e.u] > f[e.v]);
      CHECK(g.reach().reaches(e.u, e.v));
      CHECK_FALSE(used[e.u]);
      CHECK_FALSE(used[e.v]);
      used[e.u] = used[e.v] = true;
    }
    for (const Edge& e : comparable_pairs(g))
      if (f[e.u] > f[e.v]) CHECK((used[e.u] || used[e.v]));
  }
}

TEST_CASE("tester examples on lines") {
  Digraph l = gen_line(100);
  auto h2 = line_spanner(100, 2).edges;
  MonotonicityTester tester(l, h2);
  const int64_t s = tester.samples(0.5);
  CHECK(s == (4 * static_cast<int64_t>(h2.size()) + 49) / 50);
  Rng rng(1);
  FunctionOracle up(iota_values(100, 1));
  FunctionOracle down(iota_values(100, -1));
  for (int t = 0; t < 50; ++t) {
    TesterReport a = tester.run(up, 0.5, rng);
    CHECK(a.accept);
    CHECK_FALSE(a.violated.has_value());
    CHECK(a.samples == s);
    CHECK(a.queries == 2 * s);
    CHECK(static_cast<int64_t>(a.sampled.size()) == s);
    TesterReport r = tester.run(down, 0.5, rng);
    CHECK_FALSE(r.accept);
    REQUIRE(r.violated.has_value());
    CHECK(*r.violated == r.sampled.front());
  }
  CHECK(up.queries() == 50 * 2 * s);
  for (const Edge& e : tester.spanner())
    CHECK(std::binary_search(h2.begin(), h2.end(), e));
}

TEST_CASE("tester rejects with a recorded violated sample") {
  std::mt19937_64 gen(5);
  Rng rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 4 + trial % 8;
    EdgeList e = random_dag_edges(n, 0.4, gen);
    Digraph g = Digraph::from_unsorted(n, e);
    EdgeList h = random_2spanner(n, e, gen);
    std::vector<int64_t> f(n);
    for (auto& x : f) x = static_cast<int64_t>(gen() % 5);
    FunctionOracle o(f);
    TesterReport r = monotonicity_tester(g, h, o, 0.3, rng);
    CHECK(r.queries == 2 * r.samples);
    bool any = false;
    for (const Edge& s : r.sampled) any = any || f[s.u] > f[s.v];
    CHECK(r.accept == !any);
    if (!r.accept) {
      CHECK(f[r.violated->u] > f[r.violated->v]);
      CHECK(std::find(r.sampled.begin(), r.sampled.end(), *r.violated) !=
            r.sampled.end());
    }
  }
}

TEST_CASE("tester completeness across seeds and spanners") {
  std::mt19937_64 gen(9);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 3 + trial % 10;
    EdgeList e = random_dag_edges(n, 0.3, gen);
    Digraph g = Digraph::from_unsorted(n, e);
    EdgeList h = random_2spanner(n, e, gen);
    // A monotone function: ranks in a topological order, ties allowed.
    std::vector<int64_t> f(n);
    const auto& order = g.topological_order();
    for (int i = 0; i < n; ++i) f[order[i]] = i / 2;
    MonotonicityTester tester(g, h);
    for (uint64_t seed = 0; seed < 20; ++seed) {
      Rng rng(seed);
      FunctionOracle o(f);
      CHECK(tester.run(o, 0.1, rng).accept);
    }
  }
}

TEST_CASE("tester preconditions") {
  Digraph l = gen_line(4);
  CHECK_THROWS_AS(MonotonicityTester(l, {{0, 1}, {1, 2}}), Error);
  try {
    MonotonicityTester(l, {{0, 1}, {1, 2}, {2, 3}});
    FAIL("expected InvalidSpanner");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidSpanner);
  }
  MonotonicityTester t(l, line_spanner(4, 2).edges);
  FunctionOracle f(iota_values(4, 1));
  Rng rng(0);
  CHECK_THROWS_AS(t.run(f, 0.0, rng), Error);
  CHECK_THROWS_AS(t.run(f, 1.5, rng), Error);
  FunctionOracle short_f(iota_values(3, 1));
  CHECK_THROWS_AS(t.run(short_f, 0.5, rng), Error);
  // No comparable pairs: nothing to sample.
  Digraph empty(3, {});
  MonotonicityTester te(empty, {});
  FunctionOracle g3({2, 1, 0});
  TesterReport r = te.run(g3, 0.5, rng);
  CHECK(r.accept);
  CHECK(r.queries == 0);
}

TEST_CASE("planted far functions") {
  for (double eps : {0.25, 0.5}) {
    for (int n : {100, 1000}) {
      PlantedFunction pf = plant_far_function(gen_line(n), eps, 42);
      const int want = static_cast<int>(std::ceil(eps * n / 2));
      CHECK(static_cast<int>(pf.pairs.size()) == want);
      std::vector<bool> used(n, false);
      for (const Edge& e : pf.pairs) {
        CHECK(e.u < e.v);
        CHECK(pf.values[e.u] > pf.values[e.v]);
        CHECK_FALSE(used[e.u]);
        CHECK_FALSE(used[e.v]);
        used[e.u] = used[e.v] = true;
      }
      // A violation matching certifies distance >= |pairs|.
      CHECK(line_distance(pf.values) >= want);
      CHECK(line_distance(pf.values) <= 2 * want);
      PlantedFunction again = plant_far_function(gen_line(n), eps, 42);
      CHECK(again.values == pf.values);
    }
  }
  CHECK_THROWS_AS(plant_far_function(gen_line(3), 1.0, 0), Error);
  CHECK_THROWS_AS(plant_far_function(gen_line(3), 0.0, 0), Error);
}

TEST_CASE("violated spanner edges bound the distance") {
  // Greedy matching of size 2 whose pairs share the only violated edge.
  {
    EdgeList h = {{0, 1}, {0, 3}, {1, 2}, {2, 3}};
    std::vector<int64_t> f = {1, 3, 0, 1};
    EdgeList m = violation_matching(gen_line(4), f);
    CHECK(m == EdgeList{{0, 2}, {1, 3}});
    CHECK(violated_count(h, f) == 1);
    CHECK(injection_size(4, h, m, f) == 1);
    CHECK(distance_to_monotone_exact(gen_line(4), f) == 2);
  }
  std::mt19937_64 gen(13);
  int saturated = 0;
  const int total = 200;
  for (int trial = 0; trial < total; ++trial) {
    int n = 4 + trial % 9;
    EdgeList e = trial % 2 ? random_dag_edges(n, 0.4, gen) : line_edges(n);
    Digraph g = Digraph::from_unsorted(n, e);
    EdgeList h = trial % 4 == 0 ? line_spanner(n, 2).edges
                                : random_2spanner(n, e, gen);
    std::vector<int64_t> f(n);
    for (auto& x : f) x = static_cast<int64_t>(gen() % 6);
    EdgeList m = violation_matching(g, f);
    const int dist = distance_to_monotone_exact(g, f);
    const int viol = violated_count(h, f);
    // Dropping the endpoints of violated spanner edges leaves no violation.
    CHECK(2 * viol >= dist);
    CHECK(2 * viol >= static_cast<int>(m.size()));
    const int inj = injection_size(n, h, m, f);
    CHECK(2 * inj >= static_cast<int>(m.size()));
    saturated += inj == static_cast<int>(m.size());
  }
  MESSAGE("matchings with an injective assignment: " << saturated << "/"
                                                      << total);
}

TEST_CASE("soundness on planted functions") {
  for (int n : {100, 1000}) {
    Digraph l = gen_line(n);
    MonotonicityTester tester(l, line_spanner(n, 2).edges);
    for (double eps : {0.25, 0.5}) {
      PlantedFunction pf = plant_far_function(l, eps, 17);
      Rng rng(DeriveSeed(99, "soundness"));
      int rejects = 0;
      const int trials = 500;
      for (int t = 0; t < trials; ++t) {
        FunctionOracle o(pf.values);
        rejects += !tester.run(o, eps, rng).accept;
      }
      const double rate = static_cast<double>(rejects) / trials;
      MESSAGE("n=" << n << " eps=" << eps << " reject rate " << rate);
      // 2/3 minus the 95% Monte-Carlo margin.
      CHECK(rate >= 2.0 / 3 - 1.96 * std::sqrt(2.0 / 9 / trials));
    }
  }
}
