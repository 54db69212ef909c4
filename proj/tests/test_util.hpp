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

// Independent reference implementations used as test oracles. Everything here
// is deliberately naive (Floyd-Warshall, subset enumeration) and shares no
// code with the library beyond the Edge type.

#ifndef TCSPAN_TESTS_TEST_UTIL_HPP_
#define TCSPAN_TESTS_TEST_UTIL_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tcspan/graph.hpp"

namespace tcspan::testing {

inline constexpr int kInf = 1 << 29;

inline std::vector<std::vector<int>> naive_dist(int n, const EdgeList& edges) {
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (const Edge& e : edges) d[e.u][e.v] = std::min(d[e.u][e.v], 1);
  for (int w = 0; w < n; ++w)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][w] + d[w][j] < d[i][j]) d[i][j] = d[i][w] + d[w][j];
  return d;
}

// reach[u][v]: nonempty path u -> v.
inline std::vector<std::vector<bool>> naive_reach(int n, const EdgeList& edges) {
  std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
  for (const Edge& e : edges) r[e.u][e.v] = true;
  for (int w = 0; w < n; ++w)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (r[i][w] && r[w][j]) r[i][j] = true;
  return r;
}

inline bool naive_is_valid_spanner(int n, const EdgeList& g, const EdgeList& h,
                                   int k) {
  auto r = naive_reach(n, g);
  for (const Edge& e : h) {
    if (e.u == e.v || !r[e.u][e.v]) return false;
  }
  auto d = naive_dist(n, h);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && r[u][v] && d[u][v] > k) return false;
  return true;
}

inline bool naive_pairs_ok(int n, const EdgeList& h, const EdgeList& pairs,
                           int k) {
  auto d = naive_dist(n, h);
  for (const Edge& p : pairs) {
    if (d[p.u][p.v] > k) return false;
  }
  return true;
}

inline EdgeList naive_tc_edges(int n, const EdgeList& edges) {
  auto r = naive_reach(n, edges);
  EdgeList out;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && r[u][v]) out.push_back({u, v});
  return out;
}

inline EdgeList canonical_form(int n, const EdgeList& edges) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  EdgeList best;
  bool first = true;
  do {
    EdgeList mapped;
    for (const Edge& e : edges) mapped.push_back({perm[e.u], perm[e.v]});
    std::sort(mapped.begin(), mapped.end());
    if (first || mapped < best) {
      best = mapped;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// One representative per isomorphism class of DAGs on exactly n vertices.
inline std::vector<EdgeList> all_dags_up_to_iso(int n) {
  std::vector<Edge> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.push_back({i, j});
  std::set<EdgeList> seen;
  std::vector<EdgeList> out;
  for (uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    EdgeList e;
    for (size_t b = 0; b < slots.size(); ++b)
      if (mask >> b & 1) e.push_back(slots[b]);
    EdgeList c = canonical_form(n, e);
    if (seen.insert(c).second) out.push_back(e);
  }
  return out;
}

inline EdgeList random_dag_edges(int n, double p, std::mt19937_64& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_real_distribution<double> coin(0, 1);
  EdgeList e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng) < p) e.push_back({perm[i], perm[j]});
  std::sort(e.begin(), e.end());
  return e;
}

inline EdgeList line_edges(int n) {
  EdgeList e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return e;
}

// Minimum k-TC-spanner by enumerating every subset of TC \ TR on top of the
// mandatory TR edges (at most `max_candidates` candidates).
inline int naive_min_tc_spanner(int n, const EdgeList& g, int k,
                                int max_candidates = 20) {
  auto tc = naive_tc_edges(n, g);
  auto r = naive_reach(n, g);
  EdgeList tr, cand;
  for (const Edge& e : tc) {
    bool redundant = false;
    for (int w = 0; w < n && !redundant; ++w)
      if (r[e.u][w] && r[w][e.v]) redundant = true;
    (redundant ? cand : tr).push_back(e);
  }
  if (static_cast<int>(cand.size()) > max_candidates) return -1;
  int best = 1 << 30;
  for (uint32_t mask = 0; mask < (1u << cand.size()); ++mask) {
    int size = static_cast<int>(tr.size()) + __builtin_popcount(mask);
    if (size >= best) continue;
    EdgeList h = tr;
    for (size_t i = 0; i < cand.size(); ++i)
      if (mask >> i & 1) h.push_back(cand[i]);
    if (naive_is_valid_spanner(n, g, h, k)) best = size;
  }
  return best;
}

// Minimum set cover by subset enumeration; -1 if infeasible.
inline int naive_min_set_cover(int num_elements,
                               const std::vector<std::vector<int>>& sets) {
  int a = static_cast<int>(sets.size());
  int best = -1;
  for (uint32_t mask = 0; mask < (1u << a); ++mask) {
    int size = __builtin_popcount(mask);
    if (best >= 0 && size >= best) continue;
    std::vector<char> hit(num_elements, 0);
    for (int s = 0; s < a; ++s)
      if (mask >> s & 1)
        for (int e : sets[s]) hit[e] = 1;
    if (std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; })) best = size;
  }
  return best;
}

// Minimum rep-cover over the listed candidate vertices. `cluster` maps every
// vertex to a cluster id (left and right ids disjoint); edges go left->right.
inline int naive_min_rep_cover(const EdgeList& edges,
                               const std::vector<int>& cluster) {
  std::vector<int> cand;
  for (const Edge& e : edges) {
    cand.push_back(e.u);
    cand.push_back(e.v);
  }
  std::sort(cand.begin(), cand.end());
  cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
  std::set<std::pair<int, int>> super;
  for (const Edge& e : edges) super.insert({cluster[e.u], cluster[e.v]});
  int best = -1;
  for (uint32_t mask = 0; mask < (1u << cand.size()); ++mask) {
    int size = __builtin_popcount(mask);
    if (best >= 0 && size >= best) continue;
    std::set<int> in;
    for (size_t i = 0; i < cand.size(); ++i)
      if (mask >> i & 1) in.insert(cand[i]);
    std::set<std::pair<int, int>> got;
    for (const Edge& e : edges)
      if (in.count(e.u) && in.count(e.v)) got.insert({cluster[e.u], cluster[e.v]});
    if (got == super) best = size;
  }
  return best;
}

// Number of u -> v walks with between 1 and k edges (fits in 64 bits for the
// tiny graphs used in tests).
inline uint64_t naive_count_walks(int n, const EdgeList& edges, int u, int v,
                                  int k) {
  std::vector<uint64_t> cur(n, 0);
  cur[u] = 1;
  uint64_t total = 0;
  for (int step = 0; step < k; ++step) {
    std::vector<uint64_t> nxt(n, 0);
    for (const Edge& e : edges) nxt[e.v] += cur[e.u];
    cur = nxt;
    total += cur[v];
  }
  return total;
}

// H is a k-TC-spanner of the line on n vertices: every edge points forward
// and every u < v is joined within k hops. Hop-bounded BFS per source.
inline bool naive_line_ok(int n, const EdgeList& h, int k) {
  std::vector<std::vector<int>> out(n);
  for (const Edge& e : h) {
    if (e.u < 0 || e.v >= n || e.u >= e.v) return false;
    out[e.u].push_back(e.v);
  }
  std::vector<int> stamp(n, -1);
  std::vector<int> frontier, next;
  for (int u = 0; u < n; ++u) {
    int reached = 0;
    stamp[u] = u;
    frontier = {u};
    for (int hop = 0; hop < k && !frontier.empty(); ++hop) {
      next.clear();
      for (int x : frontier)
        for (int y : out[x])
          if (stamp[y] != u) {
            stamp[y] = u;
            ++reached;
            next.push_back(y);
          }
      frontier.swap(next);
    }
    if (reached != n - 1 - u) return false;
  }
  return true;
}

// Brute-force walk enumeration: per-edge counts of walks whose minimum edge
// (ascending x, then id) is that edge, plus the sum of walk minima.
struct WalkMinima {
  std::vector<uint64_t> coeff;
  double lhs = 0;
};
inline WalkMinima naive_walk_minima(int n, const EdgeList& edges, Edge p,
                  const std::vector<double>& x, int k) {
  WalkMinima b;
  b.coeff.assign(edges.size(), 0);
  std::vector<int> stack;
  std::function<void(int)> dfs = [&](int at) {
    if (at == p.v && !stack.empty()) {
      int best = stack[0];
      for (int e : stack)
        if (x[e] < x[best] || (x[e] == x[best] && e < best)) best = e;
      ++b.coeff[best];
      b.lhs += x[best];
    }
    if (static_cast<int>(stack.size()) == k) return;
    for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
      if (edges[e].u != at) continue;
      stack.push_back(e);
      dfs(edges[e].v);
      stack.pop_back();
    }
  };
  (void)n;
  dfs(p.u);
  return b;
}

// Ackermann by the defining recurrence on big integers; only for arguments
// whose values stay small.
inline boost::multiprecision::cpp_int naive_ackermann(int i, int64_t j) {
  using boost::multiprecision::cpp_int;
  if (i == 1) return cpp_int(1) << static_cast<unsigned>(j);
  if (j == 0) return naive_ackermann(i - 1, 1);
  cpp_int prev = naive_ackermann(i, j - 1);
  cpp_int arg = cpp_int(1) << static_cast<unsigned>(cpp_int(1) << static_cast<unsigned>(prev));
  return naive_ackermann(i - 1, arg.convert_to<int64_t>());
}

}  // namespace tcspan::testing

#endif  // TCSPAN_TESTS_TEST_UTIL_HPP_
