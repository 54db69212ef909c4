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

#include "tcspan/frac.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "tcspan/common.hpp"
#include "tcspan/lp.hpp"

namespace tcspan {

namespace {

// Edges of g that lie on some u -> v walk of length <= k, sorted by
// (x, edge id), with endpoints renumbered densely.
struct PairGraph {
  int nv = 0;
  int su = 0, sv = 0;
  std::vector<int> ids;
  std::vector<std::pair<int, int>> ends;
};

void check_k(int k) {
  if (k < 1 || k > kMaxFracK) {
    throw Error(ErrorCode::kInvalidArgument,
                "k must lie in [1, " + std::to_string(kMaxFracK) + "]");
  }
}

void check_pair(const Digraph& g, Edge p) {
  if (p.u < 0 || p.v < 0 || p.u >= g.n() || p.v >= g.n() || p.u == p.v) {
    throw Error(ErrorCode::kInvalidArgument, "bad constraint pair");
  }
}

std::vector<int> relevant_edges(const Digraph& g, Edge p, int k) {
  auto du = bfs_distances(g, p.u, k);
  auto dv = bfs_distances(g, p.v, k, /*reverse=*/true);
  std::vector<int> ids;
  const EdgeList& e = g.edges();
  for (int i = 0; i < static_cast<int>(e.size()); ++i) {
    int a = du[e[i].u], b = dv[e[i].v];
    if (a != kUnreachable && b != kUnreachable && a + 1 + b <= k) ids.push_back(i);
  }
  return ids;
}

PairGraph build_pair_graph(const Digraph& g, Edge p, int k,
                           const std::vector<double>* x) {
  PairGraph pg;
  pg.ids = relevant_edges(g, p, k);
  if (x != nullptr) {
    std::stable_sort(pg.ids.begin(), pg.ids.end(), [&](int a, int b) {
      return (*x)[a] < (*x)[b];
    });
  }
  std::vector<int> local(g.n(), -1);
  auto id = [&](Vertex v) {
    if (local[v] < 0) local[v] = pg.nv++;
    return local[v];
  };
  pg.su = id(p.u);
  pg.sv = id(p.v);
  const EdgeList& e = g.edges();
  for (int i : pg.ids) pg.ends.push_back({id(e[i].u), id(e[i].v)});
  return pg;
}

// Walks of length 1..k from su to sv using the edges at positions >= start.
template <typename T>
bool suffix_count(const PairGraph& pg, size_t start, int k, T& out) {
  std::vector<T> cur(pg.nv, 0), nxt(pg.nv);
  cur[pg.su] = 1;
  out = 0;
  for (int step = 0; step < k; ++step) {
    std::fill(nxt.begin(), nxt.end(), T(0));
    for (size_t i = start; i < pg.ends.size(); ++i) {
      const auto [a, b] = pg.ends[i];
      if (cur[a] == 0) continue;
      if constexpr (std::is_same_v<T, uint64_t>) {
        if (__builtin_add_overflow(nxt[b], cur[a], &nxt[b])) return false;
      } else {
        nxt[b] += cur[a];
      }
    }
    cur.swap(nxt);
    if constexpr (std::is_same_v<T, uint64_t>) {
      if (__builtin_add_overflow(out, cur[pg.sv], &out)) return false;
    } else {
      out += cur[pg.sv];
    }
  }
  return true;
}

BigCount count_from(const PairGraph& pg, size_t start, int k) {
  uint64_t fast = 0;
  if (suffix_count<uint64_t>(pg, start, k, fast)) return BigCount(fast);
  BigCount slow;
  suffix_count<BigCount>(pg, start, k, slow);
  return slow;
}

double pair_lhs(const PairGraph& pg, const std::vector<double>& x, int k) {
  double lhs = 0, prev = 0;
  for (size_t j = 0; j < pg.ids.size(); ++j) {
    double xj = x[pg.ids[j]];
    if (j > 0 && xj == prev) continue;
    if (xj != prev) lhs += (xj - prev) * count_from(pg, j, k).convert_to<double>();
    prev = xj;
  }
  return lhs;
}

std::vector<BigCount> pair_coefficients(const PairGraph& pg, int m, int k) {
  std::vector<BigCount> c(m);
  BigCount next = 0;
  for (size_t j = pg.ids.size(); j-- > 0;) {
    BigCount here = count_from(pg, j, k);
    c[pg.ids[j]] = here - next;
    next = here;
  }
  return c;
}

bool has_walk(const Digraph& g, Edge p, int k) {
  auto d = bfs_distances(g, p.u, k);
  return d[p.v] != kUnreachable;
}

}  // namespace

BigCount count_paths(const Digraph& g, Vertex u, Vertex v, int k) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  PairGraph pg;
  pg.nv = g.n();
  pg.su = u;
  pg.sv = v;
  for (const Edge& e : g.edges()) pg.ends.push_back({e.u, e.v});
  return count_from(pg, 0, k);
}

double walk_min_sum(const Digraph& g, Edge pair, const std::vector<double>& x,
                    int k) {
  check_k(k);
  check_pair(g, pair);
  return pair_lhs(build_pair_graph(g, pair, k, &x), x, k);
}

SeparationOutcome separation_oracle(const Digraph& g, const EdgeList& pairs,
                                    const std::vector<double>& x, int k,
                                    const OracleOptions& opt) {
  check_k(k);
  if (static_cast<int64_t>(x.size()) != g.m()) {
    throw Error(ErrorCode::kInvalidArgument, "assignment size mismatch");
  }
  SeparationOutcome out;
  for (int e = 0; e < static_cast<int>(x.size()); ++e) {
    if (x[e] < -opt.tol || x[e] > 1 + opt.tol) {
      out.kind = x[e] < 0 ? SeparationOutcome::Kind::kBelowZero
                          : SeparationOutcome::Kind::kAboveOne;
      out.edge = e;
      return out;
    }
  }
  double total = std::accumulate(x.begin(), x.end(), 0.0);
  if (total > opt.budget + opt.tol) {
    out.kind = SeparationOutcome::Kind::kBudget;
    return out;
  }
  for (const Edge& p : pairs) {
    check_pair(g, p);
    PairGraph pg = build_pair_graph(g, p, k, &x);
    if (pair_lhs(pg, x, k) >= 1 - opt.tol) continue;
    out.kind = SeparationOutcome::Kind::kPair;
    out.pair = p;
    out.coefficients = pair_coefficients(pg, static_cast<int>(g.m()), k);
    out.lhs = 0;
    for (int id : pg.ids) out.lhs += out.coefficients[id].convert_to<double>() * x[id];
    return out;
  }
  return out;
}

double fractional_residual(const Digraph& g, const EdgeList& pairs,
                           const std::vector<double>& x, int k) {
  double r = 0;
  for (double v : x) r = std::max({r, -v, v - 1});
  for (const Edge& p : pairs) r = std::max(r, 1 - walk_min_sum(g, p, x, k));
  return r;
}

namespace {

// Enumerates the edge-id sequences of all u -> v walks of length <= k.
void enumerate_walks(const Digraph& g, Edge p, int k,
                     std::vector<std::vector<int>>& walks, int64_t limit) {
  auto dv = bfs_distances(g, p.v, k, /*reverse=*/true);
  const EdgeList& e = g.edges();
  std::vector<int> first_out(g.n() + 1, 0);
  for (const Edge& x : e) ++first_out[x.u + 1];
  for (int i = 0; i < g.n(); ++i) first_out[i + 1] += first_out[i];
  std::vector<int> stack;
  auto dfs = [&](auto&& self, Vertex at) -> void {
    if (static_cast<int64_t>(walks.size()) > limit) return;
    if (at == p.v && !stack.empty()) walks.push_back(stack);
    int depth = static_cast<int>(stack.size());
    for (int id = first_out[at]; id < first_out[at + 1]; ++id) {
      Vertex b = e[id].v;
      if (dv[b] == kUnreachable || depth + 1 + dv[b] > k) continue;
      stack.push_back(id);
      self(self, b);
      stack.pop_back();
    }
  };
  dfs(dfs, p.u);
}

FractionalAssignment solve_explicit(const Digraph& g, const EdgeList& pairs,
                                    int k,
                                    const std::vector<std::vector<std::vector<int>>>& walks) {
  LinearProgram lp;
  const int m = static_cast<int>(g.m());
  for (int e = 0; e < m; ++e) lp.add_var(1.0);
  for (size_t p = 0; p < pairs.size(); ++p) {
    LinearProgram::Row cover;
    cover.sense = LinearProgram::Sense::kGe;
    cover.rhs = 1;
    for (const auto& w : walks[p]) {
      int y = lp.add_var(0.0);
      cover.coef.push_back({y, 1.0});
      std::vector<int> distinct = w;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (int e : distinct) {
        LinearProgram::Row link;
        link.sense = LinearProgram::Sense::kLe;
        link.rhs = 0;
        link.coef = {{y, 1.0}, {e, -1.0}};
        lp.add_row(std::move(link));
      }
    }
    lp.add_row(std::move(cover));
  }
  LpSolution sol = solve_lp(lp);
  if (sol.status != LpStatus::kOptimal) {
    throw Error(ErrorCode::kInfeasible, "explicit program not solved");
  }
  FractionalAssignment fa;
  fa.x.assign(sol.x.begin(), sol.x.begin() + m);
  fa.iterations = sol.pivots;
  fa.engine = "explicit";
  (void)k;
  return fa;
}

FractionalAssignment solve_cutting_plane(const Digraph& g, const EdgeList& pairs,
                                         int k, double tol) {
  const int m = static_cast<int>(g.m());
  const double sep_tol = std::min(tol, 1e-9);
  // Dual of  min sum x  s.t.  cuts C x >= 1,  sum x <= t,  x >= 0:
  //   max sum_c y_c - t s  s.t.  sum_c C_cj y_c - s <= 1 for every edge j.
  // Its slack basis is feasible, new cuts are new columns, and x_j is the
  // price of row j.
  ColumnLp dual(std::vector<double>(m, 1.0));
  std::vector<std::pair<int, double>> budget_col(m);
  for (int j = 0; j < m; ++j) budget_col[j] = {j, -1.0};
  const int budget = dual.add_column(0.0, budget_col);
  std::set<std::vector<std::pair<int, double>>> seen;
  int64_t lp_solves = 0;
  // Adds a cut for every pair violated at x; returns the number added.
  auto sweep = [&](const std::vector<double>& x) {
    int added = 0;
    for (const Edge& p : pairs) {
      PairGraph pg = build_pair_graph(g, p, k, &x);
      if (pair_lhs(pg, x, k) >= 1 - sep_tol) continue;
      auto c = pair_coefficients(pg, m, k);
      std::vector<std::pair<int, double>> coef;
      for (int id : pg.ids)
        if (c[id] != 0) coef.push_back({id, c[id].convert_to<double>()});
      std::sort(coef.begin(), coef.end());
      if (!seen.insert(coef).second) continue;
      dual.add_column(-1.0, coef);
      ++added;
    }
    return added;
  };
  // Optimal point over the current cuts with budget t, adding cuts until it
  // separates cleanly. Empty when t is infeasible (the dual is unbounded).
  auto feasible_at = [&](double t) -> std::vector<double> {
    dual.set_cost(budget, t);
    for (;;) {
      LpSolution sol = dual.solve();
      ++lp_solves;
      if (sol.status != LpStatus::kOptimal) return {};
      std::vector<double> x(m);
      for (int j = 0; j < m; ++j) x[j] = std::clamp(-sol.duals[j], 0.0, 1.0);
      if (sweep(x) == 0) return x;
    }
  };
  sweep(std::vector<double>(m, 0.0));
  double lo = 0, hi = static_cast<double>(m);
  std::vector<double> best(m, 1.0);
  while (hi - lo > tol * std::max(1.0, hi)) {
    double mid = (lo + hi) / 2;
    std::vector<double> x = feasible_at(mid);
    if (x.empty()) {
      lo = mid;
    } else {
      best = x;
      hi = std::accumulate(x.begin(), x.end(), 0.0);
      // Every point found is optimal over the current cuts, so nothing
      // feasible lies below it once it separates cleanly.
      lo = std::max(lo, hi - tol * std::max(1.0, hi) / 2);
    }
  }
  FractionalAssignment fa;
  fa.x = std::move(best);
  fa.iterations = lp_solves;
  fa.engine = "cutting-plane";
  return fa;
}

}  // namespace

FractionalAssignment solve_fractional(const Digraph& g, const EdgeList& pairs,
                                      int k, const FracOptions& opt) {
  check_k(k);
  for (const Edge& p : pairs) {
    check_pair(g, p);
    if (!has_walk(g, p, k)) {
      throw Error(ErrorCode::kInfeasible,
                  "no walk of length <= " + std::to_string(k) + " from " +
                      std::to_string(p.u) + " to " + std::to_string(p.v));
    }
  }
  FractionalAssignment fa;
  bool use_explicit = opt.engine == FracOptions::Engine::kExplicit;
  std::vector<std::vector<std::vector<int>>> walks;
  if (opt.engine == FracOptions::Engine::kAuto) {
    int64_t total = 0;
    use_explicit = true;
    for (const Edge& p : pairs) {
      walks.emplace_back();
      enumerate_walks(g, p, k, walks.back(), opt.explicit_walk_limit - total);
      total += static_cast<int64_t>(walks.back().size());
      if (total > opt.explicit_walk_limit) {
        use_explicit = false;
        break;
      }
    }
  } else if (use_explicit) {
    for (const Edge& p : pairs) {
      walks.emplace_back();
      enumerate_walks(g, p, k, walks.back(), std::numeric_limits<int64_t>::max());
    }
  }
  if (pairs.empty()) {
    fa.x.assign(g.m(), 0.0);
    fa.engine = use_explicit ? "explicit" : "cutting-plane";
  } else if (use_explicit) {
    fa = solve_explicit(g, pairs, k, walks);
  } else {
    fa = solve_cutting_plane(g, pairs, k, opt.tol);
  }
  for (double& v : fa.x) v = std::clamp(v, 0.0, 1.0);
  fa.edges = g.edges();
  fa.objective = std::accumulate(fa.x.begin(), fa.x.end(), 0.0);
  fa.residual = fractional_residual(g, pairs, fa.x, k);
  return fa;
}

}  // namespace tcspan
