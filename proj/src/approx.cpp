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

#include "tcspan/approx.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>

#include "tcspan/common.hpp"

namespace tcspan {

std::string_view ModeName(SpannerMode mode) {
  switch (mode) {
    case SpannerMode::kDirected:
      return "directed";
    case SpannerMode::kClientServer:
      return "client-server";
    case SpannerMode::kDiameter:
      return "k-diameter";
    case SpannerMode::kTc:
      return "tc-spanner";
  }
  return "?";
}

SpannerMode ParseMode(std::string_view name) {
  for (SpannerMode m : {SpannerMode::kDirected, SpannerMode::kClientServer,
                        SpannerMode::kDiameter, SpannerMode::kTc}) {
    if (ModeName(m) == name) return m;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown mode '" + std::string(name) + "'");
}

EdgeList variant_constraints(const Digraph& g, SpannerMode mode,
                             const EdgeList& clients) {
  switch (mode) {
    case SpannerMode::kDirected:
      return g.edges();
    case SpannerMode::kClientServer: {
      EdgeList c = clients;
      normalize_edges(c);
      return c;
    }
    case SpannerMode::kDiameter:
      return comparable_pairs(g);
    case SpannerMode::kTc:
      return tc_graph(g).edges();
  }
  return {};
}

SpannerTask make_task(const Digraph& g, SpannerMode mode, int k,
                      const EdgeList& clients, const EdgeList& servers) {
  SpannerTask t;
  t.base = g;
  t.k = k;
  t.mode = mode;
  t.working = mode == SpannerMode::kTc ? tc_graph(g) : g;
  t.pairs = variant_constraints(g, mode, clients);
  t.allowed = t.working.edges();
  if (mode == SpannerMode::kClientServer) {
    for (const Edge& e : t.pairs) {
      if (!g.has_edge(e.u, e.v)) {
        throw Error(ErrorCode::kInvalidArgument, "client edge not in graph");
      }
    }
    if (!servers.empty()) {
      t.allowed = servers;
      normalize_edges(t.allowed);
      for (const Edge& e : t.allowed) {
        if (!g.has_edge(e.u, e.v)) {
          throw Error(ErrorCode::kInvalidArgument, "server edge not in graph");
        }
      }
    }
  }
  return t;
}

namespace {

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

// Shortest-path out-tree and in-tree of z.
void add_bfs_trees(const Digraph& g, Vertex z, EdgeList& out) {
  for (bool reverse : {false, true}) {
    std::vector<char> seen(g.n(), 0);
    std::vector<Vertex> queue = {z};
    seen[z] = 1;
    for (size_t h = 0; h < queue.size(); ++h) {
      Vertex x = queue[h];
      for (Vertex y : reverse ? g.in(x) : g.out(x)) {
        if (seen[y]) continue;
        seen[y] = 1;
        queue.push_back(y);
        out.push_back(reverse ? Edge{y, x} : Edge{x, y});
      }
    }
  }
}

// Greedy hub choice: each heavy pair (more than `heavy` walks) must have a
// hub on one of its walks of length <= k.
std::vector<Vertex> greedy_hubs(const Digraph& g, const EdgeList& pairs, int k,
                                double heavy) {
  std::vector<std::vector<Vertex>> sets;
  for (const Edge& p : pairs) {
    if (count_paths(g, p.u, p.v, k).convert_to<double>() <= heavy) continue;
    auto du = bfs_distances(g, p.u, k);
    auto dv = bfs_distances(g, p.v, k, /*reverse=*/true);
    std::vector<Vertex> w;
    for (Vertex x = 0; x < g.n(); ++x) {
      if (du[x] != kUnreachable && dv[x] != kUnreachable && du[x] + dv[x] <= k)
        w.push_back(x);
    }
    sets.push_back(std::move(w));
  }
  std::vector<std::vector<int>> containing(g.n());
  std::vector<int64_t> count(g.n(), 0);
  for (int s = 0; s < static_cast<int>(sets.size()); ++s) {
    for (Vertex x : sets[s]) {
      containing[x].push_back(s);
      ++count[x];
    }
  }
  std::vector<char> done(sets.size(), 0);
  std::vector<Vertex> hubs;
  for (size_t left = sets.size(); left > 0;) {
    Vertex best = static_cast<Vertex>(
        std::max_element(count.begin(), count.end()) - count.begin());
    hubs.push_back(best);
    for (int s : containing[best]) {
      if (done[s]) continue;
      done[s] = 1;
      --left;
      for (Vertex x : sets[s]) --count[x];
    }
  }
  return hubs;
}

}  // namespace

LpSamplingReport lp_sampling_spanner(const SpannerTask& task,
                                     const LpSamplingOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  const int k = task.k;
  if (k < 2 || k > kMaxFracK) {
    throw Error(ErrorCode::kInvalidArgument, "lp spanner needs 2 <= k <= 16");
  }
  const int n = task.working.n();
  Digraph server(n, task.allowed);
  LpSamplingReport rep;
  rep.x = solve_fractional(server, task.pairs, k, opt.frac);
  const double nl = n > 1 ? n * std::log(static_cast<double>(n)) : 1.0;
  const double scale = std::pow(std::max(nl, 1.0), 1.0 - 1.0 / k);
  rep.threshold = 0.5 / scale;
  rep.sample_size =
      std::min(n, static_cast<int>(std::ceil(opt.c_r * scale - 1e-9)));
  EdgeList h;
  for (int e = 0; e < server.m(); ++e) {
    if (rep.x.x[e] >= rep.threshold) h.push_back(server.edges()[e]);
  }
  rep.threshold_edges = static_cast<int64_t>(h.size());
  if (opt.greedy) {
    rep.hubs = greedy_hubs(server, task.pairs, k, scale);
  } else {
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rng rng(DeriveSeed(opt.seed, "lp-hubs"));
    rng.Shuffle(perm.begin(), perm.end());
    rep.hubs.assign(perm.begin(), perm.begin() + rep.sample_size);
  }
  for (Vertex z : rep.hubs) add_bfs_trees(server, z, h);
  normalize_edges(h);
  // Repair: a pair still too far gets its source as an extra hub, whose
  // out-tree holds a shortest path in the server graph.
  EdgeList pairs = task.pairs;
  for (size_t i = 0; i < pairs.size();) {
    size_t j = i;
    while (j < pairs.size() && pairs[j].u == pairs[i].u) ++j;
    Digraph cur(n, h);
    auto d = bfs_distances(cur, pairs[i].u, k);
    bool missing = false;
    for (size_t p = i; p < j; ++p) missing |= d[pairs[p].v] == kUnreachable;
    if (missing) {
      rep.hubs.push_back(pairs[i].u);
      ++rep.repairs;
      add_bfs_trees(server, pairs[i].u, h);
      normalize_edges(h);
    }
    i = j;
  }
  rep.result.k = k;
  rep.result.edges = std::move(h);
  rep.result.stats.algorithm = opt.greedy ? "lp-greedy" : "lp-random";
  rep.result.stats.seed = opt.greedy ? 0 : opt.seed;
  finalize_stats(task.base, rep.result);
  rep.result.stats.runtime_ms = elapsed_ms(t0);
  return rep;
}

std::vector<Vertex> landmark_set(const Digraph& h, Vertex v, int k_prime) {
  if (k_prime < 1) throw Error(ErrorCode::kInvalidArgument, "k' must be >= 1");
  const int q = (k_prime + 3) / 4;
  auto d = bfs_distances(h, v);
  std::vector<int64_t> count(q, 0);
  for (Vertex w = 0; w < h.n(); ++w)
    if (d[w] >= 1) ++count[d[w] % q];
  int r = static_cast<int>(std::min_element(count.begin(), count.end()) -
                           count.begin());
  std::vector<Vertex> s;
  for (Vertex w = 0; w < h.n(); ++w)
    if (d[w] >= 1 && d[w] % q == r) s.push_back(w);
  return s;
}

std::vector<Vertex> middle_set(const Digraph& h, int k_prime) {
  if (k_prime < 1) throw Error(ErrorCode::kInvalidArgument, "k' must be >= 1");
  if (!h.is_dag()) throw Error(ErrorCode::kNotADag, "middle set needs a DAG");
  const int a = (3 * k_prime + 7) / 8;
  const int n = h.n();
  const auto dist = all_pairs_distances(h);
  const ReachMatrix& reach = transitive_closure(h);
  auto d = [&](Vertex x, Vertex y) { return dist[static_cast<size_t>(x) * n + y]; };
  const size_t words = (n + 63) / 64;
  // uncovered[u] holds every v with d(u, v) > a not yet covered.
  std::vector<std::vector<uint64_t>> uncovered(n, std::vector<uint64_t>(words, 0));
  std::vector<std::vector<Vertex>> ball(n);  // w with 0 <= d(u, w) <= a
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      int duv = d(u, v);
      if (duv > a) uncovered[u][v >> 6] |= uint64_t{1} << (v & 63);
      if (duv != kUnreachable && duv <= a) ball[u].push_back(v);
    }
  }
  std::vector<int64_t> count(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w : ball[u]) {
      auto row = reach.row(w);
      for (size_t i = 0; i < words; ++i)
        count[w] += std::popcount(uncovered[u][i] & row[i]);
    }
  }
  std::vector<Vertex> chosen;
  for (;;) {
    Vertex best = static_cast<Vertex>(
        std::max_element(count.begin(), count.end()) - count.begin());
    if (n == 0 || count[best] == 0) break;
    chosen.push_back(best);
    auto brow = reach.row(best);
    for (Vertex u = 0; u < n; ++u) {
      int duw = d(u, best);
      if (duw == kUnreachable || duw > a) continue;
      for (size_t i = 0; i < words; ++i) {
        uint64_t fresh = uncovered[u][i] & brow[i];
        uncovered[u][i] &= ~fresh;
        while (fresh) {
          Vertex v = static_cast<Vertex>(i * 64 + std::countr_zero(fresh));
          fresh &= fresh - 1;
          for (Vertex w : ball[u])
            if (reach.reaches(w, v)) --count[w];
        }
      }
    }
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

LargeKReport largek_spanner(const Digraph& g, int k) {
  const auto t0 = std::chrono::steady_clock::now();
  if (k < 6) {
    throw Error(ErrorCode::kKTooSmall, "large-k algorithm needs k >= 6");
  }
  LargeKReport rep;
  rep.k_prime = 8 * (k - 5) / 5;
  rep.condensation = condense_scc(g);
  rep.reduced = transitive_reduction(rep.condensation.dag);
  const auto& members = rep.condensation.members;
  auto hub = [&](Vertex c) { return members[c].front(); };
  EdgeList h;
  bool nontrivial = false;
  for (const auto& comp : members) {
    for (size_t i = 1; i < comp.size(); ++i) {
      h.push_back({comp[0], comp[i]});
      h.push_back({comp[i], comp[0]});
      nontrivial = true;
    }
  }
  for (const Edge& e : rep.reduced.edges()) h.push_back({hub(e.u), hub(e.v)});
  const int slack = nontrivial ? 2 : 0;
  if (comparable_diameter(rep.reduced) + slack <= k) {
    rep.reduction_only = true;
  } else {
    rep.middle = middle_set(rep.reduced, rep.k_prime);
    for (Vertex w : rep.middle) {
      auto s = landmark_set(rep.reduced, w, rep.k_prime);
      rep.landmark_sizes.push_back(static_cast<int64_t>(s.size()));
      for (Vertex x : s) h.push_back({hub(w), hub(x)});
    }
  }
  rep.result.k = k;
  rep.result.edges = std::move(h);
  rep.result.stats.algorithm = "largek";
  finalize_stats(g, rep.result);
  rep.result.stats.runtime_ms = elapsed_ms(t0);
  return rep;
}

}  // namespace tcspan
