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

#include "tcspan/exact.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "tcspan/common.hpp"

namespace tcspan {

namespace {

enum ItemState : char { kFree = 0, kChosen = 1, kExcluded = 2 };

// Result of evaluating a partial assignment: either infeasible, or the list
// of still-violated constraints, each with the free items that could repair
// it. Any completion satisfying a constraint must choose one of them.
struct Evaluation {
  bool infeasible = false;
  std::vector<std::vector<int>> relevant;
};

class CoverProblem {
 public:
  virtual ~CoverProblem() = default;
  virtual int num_items() const = 0;
  virtual void evaluate(const std::vector<char>& state, Evaluation& ev) = 0;
};

// Branch and bound over item subsets. Branching picks the violated
// constraint with the fewest repair items e_1..e_r (ordered by how many
// violated constraints they touch) and explores "choose e_i, exclude
// e_1..e_{i-1}" for each i.
class Search {
 public:
  explicit Search(CoverProblem& p) : p_(p), state_(p.num_items(), kFree) {}

  // Minimum number of chosen items; -1 if infeasible.
  int minimize() {
    bound_ = p_.num_items() + 1;
    stop_at_first_ = false;
    best_.clear();
    found_ = false;
    dfs(0);
    return found_ ? bound_ : -1;
  }

  // Lexicographically least optimal item set.
  std::vector<int> lex_least(int opt, std::vector<int> known) {
    std::vector<int> result;
    int last = -1;
    for (int pos = 0; pos < opt; ++pos) {
      int pick = known[pos];
      for (int c = last + 1; c < known[pos]; ++c) {
        std::fill(state_.begin(), state_.end(), kFree);
        for (int x : result) state_[x] = kChosen;
        for (int x = last + 1; x < c; ++x) state_[x] = kExcluded;
        state_[c] = kChosen;
        bound_ = opt + 1;
        stop_at_first_ = true;
        best_.clear();
        if (dfs(pos + 1)) {
          pick = c;
          known = chosen_items(best_);
          break;
        }
      }
      result.push_back(pick);
      last = pick;
    }
    std::fill(state_.begin(), state_.end(), kFree);
    return result;
  }

  std::vector<int> best_items() const { return chosen_items(best_); }
  int64_t nodes() const { return nodes_; }

 private:
  static std::vector<int> chosen_items(const std::vector<char>& st) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(st.size()); ++i)
      if (st[i] == kChosen) out.push_back(i);
    return out;
  }

  int lower_bound(const Evaluation& ev) {
    freq_.assign(p_.num_items(), 0);
    int maxf = 0;
    for (const auto& r : ev.relevant)
      for (int e : r) maxf = std::max(maxf, ++freq_[e]);
    const int v = static_cast<int>(ev.relevant.size());
    int lb = maxf == 0 ? v : (v + maxf - 1) / maxf;
    // Greedy packing of constraints with pairwise disjoint repair sets.
    order_.resize(v);
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      return ev.relevant[a].size() < ev.relevant[b].size();
    });
    used_.assign(p_.num_items(), 0);
    int packed = 0;
    for (int c : order_) {
      bool disjoint = true;
      for (int e : ev.relevant[c])
        if (used_[e]) {
          disjoint = false;
          break;
        }
      if (!disjoint) continue;
      ++packed;
      for (int e : ev.relevant[c]) used_[e] = 1;
    }
    return std::max(lb, packed);
  }

  bool dfs(int count) {
    ++nodes_;
    Evaluation ev;
    p_.evaluate(state_, ev);
    if (ev.infeasible) return false;
    if (ev.relevant.empty()) {
      if (count < bound_) {
        bound_ = count;
        best_ = state_;
        found_ = true;
      }
      return stop_at_first_;
    }
    if (count + lower_bound(ev) >= bound_) return false;
    size_t pick = 0;
    for (size_t c = 1; c < ev.relevant.size(); ++c) {
      if (ev.relevant[c].size() < ev.relevant[pick].size()) pick = c;
    }
    std::vector<int> items = ev.relevant[pick];
    std::vector<int> f(items.size());
    for (size_t i = 0; i < items.size(); ++i) f[i] = freq_[items[i]];
    std::vector<size_t> idx(items.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
      if (f[a] != f[b]) return f[a] > f[b];
      return items[a] < items[b];
    });
    std::vector<int> touched;
    bool found = false;
    for (size_t i : idx) {
      int e = items[i];
      state_[e] = kChosen;
      touched.push_back(e);
      if (dfs(count + 1)) {
        found = true;
        break;
      }
      state_[e] = kExcluded;
      if (count + 1 >= bound_) break;
    }
    for (int e : touched) state_[e] = kFree;
    return found;
  }

  CoverProblem& p_;
  std::vector<char> state_;
  std::vector<char> best_;
  int bound_ = 0;
  bool stop_at_first_ = false;
  bool found_ = false;
  int64_t nodes_ = 0;
  std::vector<int> freq_, order_;
  std::vector<char> used_;
};

constexpr int kInfDist = 1 << 28;

// Pairs (u, v) must end up within distance k using the forced edges plus the
// chosen candidates.
class SpannerProblem : public CoverProblem {
 public:
  SpannerProblem(int n, int k, EdgeList forced, EdgeList candidates,
                 EdgeList pairs)
      : n_(n), k_(k), forced_(std::move(forced)),
        cand_(std::move(candidates)), pairs_(std::move(pairs)) {}

  int num_items() const override { return static_cast<int>(cand_.size()); }

  void evaluate(const std::vector<char>& state, Evaluation& ev) override {
    build(state, /*with_free=*/false, h_out_);
    build(state, /*with_free=*/true, f_out_);
    all_dist(f_out_, df_);
    std::vector<int> dh;
    int cur_src = -1;
    for (const Edge& p : pairs_) {
      if (p.u != cur_src) {
        cur_src = p.u;
        bfs(h_out_, p.u, dh);
      }
      if (dh[p.v] <= k_) continue;
      if (df_[idx(p.u, p.v)] > k_) {
        ev.infeasible = true;
        return;
      }
      std::vector<int> rel;
      for (int c = 0; c < num_items(); ++c) {
        if (state[c] != kFree) continue;
        const Edge& e = cand_[c];
        if (df_[idx(p.u, e.u)] + 1 + df_[idx(e.v, p.v)] <= k_) rel.push_back(c);
      }
      ev.relevant.push_back(std::move(rel));
    }
  }

  EdgeList witness(const std::vector<int>& chosen) const {
    EdgeList w = forced_;
    for (int c : chosen) w.push_back(cand_[c]);
    std::sort(w.begin(), w.end());
    return w;
  }

 private:
  size_t idx(int u, int v) const { return static_cast<size_t>(u) * n_ + v; }

  void build(const std::vector<char>& state, bool with_free,
             std::vector<std::vector<Vertex>>& out) const {
    out.assign(n_, {});
    for (const Edge& e : forced_) out[e.u].push_back(e.v);
    for (int c = 0; c < num_items(); ++c) {
      if (state[c] == kChosen || (with_free && state[c] == kFree)) {
        out[cand_[c].u].push_back(cand_[c].v);
      }
    }
  }

  void bfs(const std::vector<std::vector<Vertex>>& out, int s,
           std::vector<int>& d) const {
    d.assign(n_, kInfDist);
    d[s] = 0;
    queue_.clear();
    queue_.push_back(s);
    for (size_t h = 0; h < queue_.size(); ++h) {
      int x = queue_[h];
      if (d[x] == k_) continue;
      for (Vertex y : out[x]) {
        if (d[y] == kInfDist) {
          d[y] = d[x] + 1;
          queue_.push_back(y);
        }
      }
    }
  }

  void all_dist(const std::vector<std::vector<Vertex>>& out,
                std::vector<int>& d) const {
    d.assign(static_cast<size_t>(n_) * n_, kInfDist);
    std::vector<int> row;
    for (int s = 0; s < n_; ++s) {
      bfs(out, s, row);
      std::copy(row.begin(), row.end(), d.begin() + static_cast<size_t>(s) * n_);
    }
  }

  int n_, k_;
  EdgeList forced_, cand_, pairs_;
  std::vector<std::vector<Vertex>> h_out_, f_out_;
  std::vector<int> df_;
  mutable std::vector<int> queue_;
};

int resolve_cap(const ExactOptions& opt, int fallback) {
  return opt.cap > 0 ? opt.cap : SizeCap(fallback);
}

// Distances from s within depth k in the graph given by adjacency lists,
// optionally ignoring one edge.
std::vector<int> bounded_bfs(const Digraph& g, Vertex s, int k, Edge skip) {
  std::vector<int> d(g.n(), kInfDist);
  std::vector<Vertex> q = {s};
  d[s] = 0;
  for (size_t h = 0; h < q.size(); ++h) {
    Vertex x = q[h];
    if (d[x] == k) continue;
    for (Vertex y : g.out(x)) {
      if (x == skip.u && y == skip.v) continue;
      if (d[y] == kInfDist) {
        d[y] = d[x] + 1;
        q.push_back(y);
      }
    }
  }
  return d;
}

ExactSpannerResult solve_spanner(int n, int k, EdgeList forced,
                                 EdgeList candidates, EdgeList pairs,
                                 const ExactOptions& opt) {
  SpannerProblem prob(n, k, std::move(forced), candidates, std::move(pairs));
  Search search(prob);
  int best = search.minimize();
  if (best < 0) throw Error(ErrorCode::kInfeasible, "no spanner exists");
  std::vector<int> items = search.best_items();
  int64_t nodes = search.nodes();
  if (opt.lex_least) {
    items = search.lex_least(best, items);
    nodes = search.nodes();
  }
  ExactSpannerResult r;
  r.witness = prob.witness(items);
  r.size = static_cast<int64_t>(r.witness.size());
  r.nodes = nodes;
  r.candidates = static_cast<int>(candidates.size());
  return r;
}

}  // namespace

ExactSpannerResult exact_sparsest_tc_spanner(const Digraph& g, int k,
                                             const ExactOptions& opt) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  Digraph tr = transitive_reduction(g);  // throws kNotADag
  EdgeList cand;
  EdgeList all = comparable_pairs(g);
  std::set_difference(all.begin(), all.end(), tr.edges().begin(),
                      tr.edges().end(), std::back_inserter(cand));
  const int cap = resolve_cap(opt, 22);
  if (static_cast<int>(cand.size()) > cap) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(cand.size()) + " candidate shortcuts exceed cap " +
                    std::to_string(cap));
  }
  EdgeList pairs;
  for (Vertex u = 0; u < g.n(); ++u) {
    auto d = bfs_distances(tr, u, k);
    for (const Edge& p : all)
      if (p.u == u && d[p.v] == kUnreachable) pairs.push_back(p);
  }
  return solve_spanner(g.n(), k, tr.edges(), std::move(cand), std::move(pairs),
                       opt);
}

ExactSpannerResult exact_directed_spanner(const Digraph& g, int k,
                                          const ExactOptions& opt) {
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  EdgeList forced, cand;
  for (const Edge& e : g.edges()) {
    auto d = bounded_bfs(g, e.u, k, e);
    (d[e.v] == kInfDist ? forced : cand).push_back(e);
  }
  const int cap = resolve_cap(opt, 22);
  if (static_cast<int>(cand.size()) > cap) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(cand.size()) + " candidate edges exceed cap " +
                    std::to_string(cap));
  }
  Digraph f(g.n(), forced);
  EdgeList pairs;
  for (const Edge& e : cand) {
    auto d = bfs_distances(f, e.u, k);
    if (d[e.v] == kUnreachable) pairs.push_back(e);
  }
  return solve_spanner(g.n(), k, std::move(forced), std::move(cand),
                       std::move(pairs), opt);
}

namespace {

class RepCoverProblem : public CoverProblem {
 public:
  explicit RepCoverProblem(const MinRepInstance& inst) {
    for (const Edge& e : inst.edges) {
      items_.push_back(e.u);
      items_.push_back(e.v);
    }
    std::sort(items_.begin(), items_.end());
    items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
    std::map<std::pair<int, int>, int> super_id;
    for (const Edge& e : inst.edges) {
      auto key = std::make_pair(inst.left_cluster(e.u), inst.right_cluster(e.v));
      auto [it, fresh] = super_id.try_emplace(key, static_cast<int>(groups_.size()));
      if (fresh) groups_.emplace_back();
      groups_[it->second].push_back({item(e.u), item(e.v)});
    }
  }

  int num_items() const override { return static_cast<int>(items_.size()); }
  const std::vector<int>& items() const { return items_; }

  void evaluate(const std::vector<char>& state, Evaluation& ev) override {
    for (const auto& edges : groups_) {
      bool covered = false, possible = false;
      std::vector<int> rel;
      for (const auto& [a, b] : edges) {
        if (state[a] == kChosen && state[b] == kChosen) {
          covered = true;
          break;
        }
        if (state[a] == kExcluded || state[b] == kExcluded) continue;
        possible = true;
        if (state[a] == kFree) rel.push_back(a);
        if (state[b] == kFree) rel.push_back(b);
      }
      if (covered) continue;
      if (!possible) {
        ev.infeasible = true;
        return;
      }
      std::sort(rel.begin(), rel.end());
      rel.erase(std::unique(rel.begin(), rel.end()), rel.end());
      ev.relevant.push_back(std::move(rel));
    }
  }

 private:
  int item(Vertex v) const {
    return static_cast<int>(std::lower_bound(items_.begin(), items_.end(), v) -
                            items_.begin());
  }

  std::vector<int> items_;
  std::vector<std::vector<std::pair<int, int>>> groups_;
};

class SetCoverProblem : public CoverProblem {
 public:
  explicit SetCoverProblem(const SetCoverInstance& inst)
      : a_(inst.a), containing_(inst.b) {
    for (int s = 0; s < inst.a; ++s)
      for (int e : inst.sets[s]) containing_[e].push_back(s);
  }

  int num_items() const override { return a_; }

  void evaluate(const std::vector<char>& state, Evaluation& ev) override {
    for (const auto& sets : containing_) {
      std::vector<int> rel;
      bool covered = false;
      for (int s : sets) {
        if (state[s] == kChosen) {
          covered = true;
          break;
        }
        if (state[s] == kFree) rel.push_back(s);
      }
      if (covered) continue;
      if (rel.empty()) {
        ev.infeasible = true;
        return;
      }
      ev.relevant.push_back(std::move(rel));
    }
  }

 private:
  int a_;
  std::vector<std::vector<int>> containing_;
};

template <typename Problem>
ExactCoverResult solve_cover(Problem& prob, const ExactOptions& opt) {
  Search search(prob);
  int best = search.minimize();
  if (best < 0) throw Error(ErrorCode::kInfeasible, "no cover exists");
  std::vector<int> items = search.best_items();
  if (opt.lex_least) items = search.lex_least(best, items);
  ExactCoverResult r;
  r.size = best;
  r.witness = items;
  r.nodes = search.nodes();
  return r;
}

}  // namespace

ExactCoverResult exact_rep_cover(const MinRepInstance& inst,
                                 const ExactOptions& opt) {
  RepCoverProblem prob(inst);
  const int cap = resolve_cap(opt, 24);
  if (prob.num_items() > cap) {
    throw Error(ErrorCode::kTooLarge,
                std::to_string(prob.num_items()) +
                    " non-isolated vertices exceed cap " + std::to_string(cap));
  }
  ExactCoverResult r = solve_cover(prob, opt);
  for (int& x : r.witness) x = prob.items()[x];
  return r;
}

ExactCoverResult exact_set_cover(const SetCoverInstance& inst,
                                 const ExactOptions& opt) {
  const int cap = resolve_cap(opt, 24);
  if (inst.a > cap) {
    throw Error(ErrorCode::kTooLarge, std::to_string(inst.a) +
                                          " sets exceed cap " + std::to_string(cap));
  }
  SetCoverProblem prob(inst);
  return solve_cover(prob, opt);
}

}  // namespace tcspan
