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

#include <sstream>

#include "doctest.h"
#include "tcspan/common.hpp"
#include "tcspan/graph.hpp"
#include "tcspan/io.hpp"
#include "test_util.hpp"

using namespace tcspan;
using namespace tcspan::testing;

namespace {

Digraph line(int n) { return Digraph(n, line_edges(n)); }

Digraph cycle3() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace

TEST_CASE("closure examples") {
  auto pairs = comparable_pairs(line(3));
  CHECK(pairs == EdgeList{{0, 1}, {0, 2}, {1, 2}});
  CHECK(comparable_pairs(Digraph(4, {})).empty());
  CHECK(comparable_pairs(cycle3()).size() == 6);
  CHECK(transitive_closure(cycle3()).reaches(0, 0));
  CHECK_FALSE(transitive_closure(line(3)).reaches(1, 1));
}

TEST_CASE("reduction examples") {
  Digraph g(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(transitive_reduction(g).edges() == EdgeList{{0, 1}, {1, 2}});
  CHECK(transitive_reduction(line(6)).edges() == line(6).edges());
  CHECK_THROWS_AS(transitive_reduction(cycle3()), Error);
  try {
    transitive_reduction(cycle3());
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotADag);
  }
}

TEST_CASE("condensation examples") {
  auto c = condense_scc(cycle3());
  CHECK(c.dag.n() == 1);
  CHECK(c.dag.m() == 0);

  Digraph dag(4, {{0, 2}, {1, 2}, {2, 3}});
  auto cd = condense_scc(dag);
  CHECK(cd.dag.edges() == dag.edges());
  CHECK(cd.component == std::vector<int>{0, 1, 2, 3});

  // Two 2-cycles joined by one edge. Oracle: mutual reachability classes.
  Digraph two(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}, {1, 2}});
  auto ct = condense_scc(two);
  auto r = naive_reach(4, two.edges());
  for (int u = 0; u < 4; ++u)
    for (int v = 0; v < 4; ++v)
      CHECK((ct.component[u] == ct.component[v]) ==
            (u == v || (r[u][v] && r[v][u])));
  CHECK(ct.dag.n() == 2);
  CHECK(ct.dag.m() == 1);
}

TEST_CASE("verify_spanner examples") {
  Digraph g = line(4);
  CHECK(verify_spanner(g, g.edges(), 3).valid);
  auto rep = verify_spanner(g, g.edges(), 2);
  REQUIRE_FALSE(rep.valid);
  CHECK(rep.violation->kind == Violation::Kind::kMissingPair);
  CHECK(rep.violation->u == 0);
  CHECK(rep.violation->v == 3);

  EdgeList foreign = g.edges();
  foreign.push_back({3, 0});
  auto rf = verify_spanner(g, foreign, 3);
  REQUIRE_FALSE(rf.valid);
  CHECK(rf.violation->kind == Violation::Kind::kForeignEdge);
  CHECK(rf.violation->u == 3);
  CHECK(rf.violation->v == 0);
}

TEST_CASE("distance examples") {
  auto d = all_pairs_distances(line(3));
  CHECK(d[0 * 3 + 2] == 2);
  auto dt = all_pairs_distances(tc_graph(line(3)));
  CHECK(dt[0 * 3 + 2] == 1);
  auto dd = all_pairs_distances(Digraph(2, {}));
  CHECK(dd[0 * 2 + 1] == kUnreachable);
}

TEST_CASE("exhaustive small DAG properties") {
  // Known counts of unlabeled DAGs: 1, 2, 6, 31, 302.
  const int expected[] = {0, 1, 2, 6, 31, 302};
  for (int n = 1; n <= 5; ++n) {
    auto dags = all_dags_up_to_iso(n);
    CHECK(dags.size() == static_cast<size_t>(expected[n]));
    for (const EdgeList& e : dags) {
      Digraph g(n, e);
      auto ref = naive_tc_edges(n, e);
      CHECK(comparable_pairs(g) == ref);
      Digraph tr = transitive_reduction(g);
      // Round trip and minimality.
      CHECK(naive_tc_edges(n, tr.edges()) == ref);
      for (size_t i = 0; i < tr.edges().size(); ++i) {
        EdgeList less = tr.edges();
        less.erase(less.begin() + i);
        CHECK(naive_tc_edges(n, less) != ref);
      }
      // Full closure always spans at stretch 1; TR spans iff diameter <= k.
      CHECK(verify_spanner(g, ref, 1).valid);
      int diam = comparable_diameter(tr);
      for (int k = 1; k <= 4; ++k) {
        bool v = verify_spanner(g, tr.edges(), k).valid;
        CHECK(v == (diam <= k));
        CHECK(v == naive_is_valid_spanner(n, e, tr.edges(), k));
      }
    }
  }
}

TEST_CASE("random graphs agree with naive oracles") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> nd(1, 14);
  std::uniform_real_distribution<double> coin(0, 1);
  for (int trial = 0; trial < 300; ++trial) {
    int n = nd(rng);
    double p = coin(rng) * 0.4;
    EdgeList e;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (u != v && coin(rng) < p) e.push_back({u, v});
    Digraph g(n, e);
    auto r = naive_reach(n, e);
    const ReachMatrix& rm = g.reach();
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) CHECK(rm.reaches(u, v) == r[u][v]);
    // Transitivity of the matrix.
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w)
          if (rm.reaches(u, v) && rm.reaches(v, w)) CHECK(rm.reaches(u, w));
    // Random candidate spanners: verify agrees with the naive check and the
    // reported pair is the lexicographically smallest offender.
    auto tc = naive_tc_edges(n, e);
    for (int rep = 0; rep < 3; ++rep) {
      EdgeList h;
      for (const Edge& x : tc)
        if (coin(rng) < 0.6) h.push_back(x);
      if (coin(rng) < 0.2 && n >= 2) h.push_back({static_cast<Vertex>(n - 1), 0});
      normalize_edges(h);
      h.erase(std::remove_if(h.begin(), h.end(),
                             [](const Edge& x) { return x.u == x.v; }),
              h.end());
      int k = 1 + static_cast<int>(coin(rng) * 3);
      auto rep_v = verify_spanner(g, h, k);
      CHECK(rep_v.valid == naive_is_valid_spanner(n, e, h, k));
      if (!rep_v.valid) {
        auto d = naive_dist(n, h);
        std::set<Edge> hs(h.begin(), h.end());
        std::optional<Edge> first;
        for (int u = 0; u < n && !first; ++u)
          for (int v = 0; v < n && !first; ++v) {
            if (u == v) continue;
            bool foreign = hs.count({u, v}) && !r[u][v];
            bool missing = r[u][v] && d[u][v] > k;
            if (foreign || missing) first = Edge{u, v};
          }
        REQUIRE(first.has_value());
        CHECK(rep_v.violation->u == first->u);
        CHECK(rep_v.violation->v == first->v);
      }
    }
  }
}

TEST_CASE("large sparse verification without a full matrix") {
  const int n = 40000;
  Digraph g = line(n);
  CHECK(verify_spanner(g, g.edges(), n - 1).valid);
  auto rep = verify_spanner(g, g.edges(), n - 2);
  REQUIRE_FALSE(rep.valid);
  CHECK(rep.violation->u == 0);
  CHECK(rep.violation->v == n - 1);
}

TEST_CASE("edge list round trip") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    Digraph g(12, random_dag_edges(12, 0.3, rng));
    std::string text = to_edge_list(g);
    std::istringstream in(text);
    Digraph back = read_edge_list(in);
    CHECK(back.edges() == g.edges());
    CHECK(to_edge_list(back) == text);
  }
  std::istringstream bad("tcs 3 1\n0 0\n");
  CHECK_THROWS_AS(read_edge_list(bad), Error);
  std::istringstream crlf("tcs 2 1\r\n0 1\r\n");
  CHECK_THROWS_AS(read_edge_list(crlf), Error);
  std::istringstream dup("tcs 2 2\n0 1\n0 1\n");
  CHECK_THROWS_AS(read_edge_list(dup), Error);
  CHECK(to_edge_list(line(3)) == "tcs 3 2\n0 1\n1 2\n");
  CHECK(to_dot(line(2)).find("0 -> 1") != std::string::npos);
}

TEST_CASE("digraph invariants") {
  CHECK_THROWS_AS(Digraph(2, {{0, 0}}), Error);
  CHECK_THROWS_AS(Digraph(2, {{0, 2}}), Error);
  CHECK_THROWS_AS(Digraph(2, {{0, 1}, {0, 1}}), Error);
  Digraph g = Digraph::from_unsorted(3, {{1, 2}, {0, 1}, {1, 2}, {2, 2}});
  CHECK(g.edges() == EdgeList{{0, 1}, {1, 2}});
  CHECK(g.is_dag());
  CHECK_FALSE(cycle3().is_dag());
}
