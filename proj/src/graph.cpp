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

#include "tcspan/graph.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <numeric>

#include "tcspan/common.hpp"

namespace tcspan {

namespace {

constexpr int kMaxReachMatrixVertices = 32768;
constexpr int kVerifyBlock = 4096;

struct Csr {
  std::vector<int64_t> offsets;
  std::vector<Vertex> targets;
};

Csr build_csr(int n, const EdgeList& edges, bool reverse) {
  Csr c;
  c.offsets.assign(n + 1, 0);
  for (const Edge& e : edges) ++c.offsets[(reverse ? e.v : e.u) + 1];
  for (int i = 0; i < n; ++i) c.offsets[i + 1] += c.offsets[i];
  c.targets.resize(edges.size());
  std::vector<int64_t> pos(c.offsets.begin(), c.offsets.end() - 1);
  for (const Edge& e : edges) {
    if (reverse) {
      c.targets[pos[e.v]++] = e.u;
    } else {
      c.targets[pos[e.u]++] = e.v;
    }
  }
  // Forward lists inherit the sorted edge order; reverse lists need a sort.
  if (reverse) {
    for (int i = 0; i < n; ++i) {
      std::sort(c.targets.begin() + c.offsets[i],
                c.targets.begin() + c.offsets[i + 1]);
    }
  }
  return c;
}

}  // namespace

// Bitset.

void Bitset::clear() { std::fill(words_.begin(), words_.end(), 0); }

int Bitset::count() const {
  int c = 0;
  for (uint64_t w : words_) c += std::popcount(w);
  return c;
}

bool Bitset::any() const {
  for (uint64_t w : words_) {
    if (w != 0) return true;
  }
  return false;
}

int Bitset::find_next(int from) const {
  if (from >= size_) return -1;
  size_t wi = from >> 6;
  uint64_t w = words_[wi] & (~uint64_t{0} << (from & 63));
  while (true) {
    if (w != 0) {
      int idx = static_cast<int>(wi * 64 + std::countr_zero(w));
      return idx < size_ ? idx : -1;
    }
    if (++wi >= words_.size()) return -1;
    w = words_[wi];
  }
}

Bitset& Bitset::operator|=(const Bitset& o) {
  for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

Bitset& Bitset::subtract(const Bitset& o) {
  for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  return *this;
}

// ReachMatrix.

ReachMatrix::ReachMatrix(int n)
    : n_(n), stride_((n + 63) / 64), bits_(static_cast<size_t>(n) * stride_, 0) {}

int64_t ReachMatrix::count_row(Vertex u) const {
  int64_t c = 0;
  for (uint64_t w : row(u)) c += std::popcount(w);
  return reaches(u, u) ? c - 1 : c;
}

int64_t ReachMatrix::count_comparable_pairs() const {
  int64_t total = 0;
  for (Vertex u = 0; u < n_; ++u) total += count_row(u);
  return total;
}

// Digraph.

struct Digraph::Data {
  int n = 0;
  EdgeList edges;
  Csr out;
  Csr in;
  bool is_dag = true;
  std::vector<Vertex> topo;
  std::once_flag reach_once;
  std::unique_ptr<ReachMatrix> reach;
};

void normalize_edges(EdgeList& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

Digraph::Digraph() : Digraph(0, {}) {}

Digraph::Digraph(int n, EdgeList edges) : d_(std::make_shared<Data>()) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  std::sort(edges.begin(), edges.end());
  for (size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge endpoint out of range: " + std::to_string(e.u) + " " +
                      std::to_string(e.v));
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kInvalidArgument,
                  "self-loop at " + std::to_string(e.u));
    }
    if (i > 0 && edges[i - 1] == e) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate edge " + std::to_string(e.u) + " " +
                      std::to_string(e.v));
    }
  }
  d_->n = n;
  d_->edges = std::move(edges);
  d_->out = build_csr(n, d_->edges, false);
  d_->in = build_csr(n, d_->edges, true);

  // Kahn's algorithm; sources are processed in ascending order.
  std::vector<int64_t> indeg(n);
  for (Vertex v = 0; v < n; ++v) indeg[v] = d_->in.offsets[v + 1] - d_->in.offsets[v];
  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex v = 0; v < n; ++v) {
    if (indeg[v] == 0) order.push_back(v);
  }
  for (size_t head = 0; head < order.size(); ++head) {
    Vertex u = order[head];
    for (int64_t i = d_->out.offsets[u]; i < d_->out.offsets[u + 1]; ++i) {
      Vertex w = d_->out.targets[i];
      if (--indeg[w] == 0) order.push_back(w);
    }
  }
  d_->is_dag = static_cast<int>(order.size()) == n;
  if (d_->is_dag) d_->topo = std::move(order);
}

Digraph Digraph::from_unsorted(int n, EdgeList edges) {
  edges.erase(std::remove_if(edges.begin(), edges.end(),
                             [](const Edge& e) { return e.u == e.v; }),
              edges.end());
  normalize_edges(edges);
  return Digraph(n, std::move(edges));
}

int Digraph::n() const { return d_->n; }
int64_t Digraph::m() const { return static_cast<int64_t>(d_->edges.size()); }
const EdgeList& Digraph::edges() const { return d_->edges; }

std::span<const Vertex> Digraph::out(Vertex v) const {
  return {d_->out.targets.data() + d_->out.offsets[v],
          static_cast<size_t>(d_->out.offsets[v + 1] - d_->out.offsets[v])};
}

std::span<const Vertex> Digraph::in(Vertex v) const {
  return {d_->in.targets.data() + d_->in.offsets[v],
          static_cast<size_t>(d_->in.offsets[v + 1] - d_->in.offsets[v])};
}

bool Digraph::has_edge(Vertex u, Vertex v) const {
  auto o = out(u);
  return std::binary_search(o.begin(), o.end(), v);
}

bool Digraph::is_dag() const { return d_->is_dag; }

const std::vector<Vertex>& Digraph::topological_order() const {
  if (!d_->is_dag) throw Error(ErrorCode::kNotADag, "graph has a cycle");
  return d_->topo;
}

const ReachMatrix& Digraph::reach() const {
  std::call_once(d_->reach_once, [this] {
    const int n = d_->n;
    if (n > kMaxReachMatrixVertices) {
      throw Error(ErrorCode::kTooLarge,
                  "reachability matrix limited to " +
                      std::to_string(kMaxReachMatrixVertices) + " vertices");
    }
    auto r = std::make_unique<ReachMatrix>(n);
    if (d_->is_dag) {
      for (auto it = d_->topo.rbegin(); it != d_->topo.rend(); ++it) {
        Vertex u = *it;
        auto row = r->mutable_row(u);
        for (Vertex w : out(u)) {
          auto wrow = r->row(w);
          for (size_t i = 0; i < row.size(); ++i) row[i] |= wrow[i];
          r->set(u, w);
        }
      }
    } else {
      Condensation c = condense_scc(*this);
      const int nc = c.dag.n();
      std::vector<std::vector<uint64_t>> rows(nc,
                                              std::vector<uint64_t>((n + 63) / 64));
      for (auto it = c.dag.topological_order().rbegin();
           it != c.dag.topological_order().rend(); ++it) {
        int cid = *it;
        auto& row = rows[cid];
        if (c.members[cid].size() > 1) {
          for (Vertex x : c.members[cid]) row[x >> 6] |= uint64_t{1} << (x & 63);
        }
        for (Vertex d : c.dag.out(cid)) {
          for (size_t i = 0; i < row.size(); ++i) row[i] |= rows[d][i];
          for (Vertex x : c.members[d]) row[x >> 6] |= uint64_t{1} << (x & 63);
        }
      }
      for (Vertex u = 0; u < n; ++u) {
        auto dst = r->mutable_row(u);
        std::copy(rows[c.component[u]].begin(), rows[c.component[u]].end(),
                  dst.begin());
      }
    }
    d_->reach = std::move(r);
  });
  return *d_->reach;
}

// Closure and reduction.

const ReachMatrix& transitive_closure(const Digraph& g) { return g.reach(); }

EdgeList comparable_pairs(const Digraph& g) {
  const ReachMatrix& r = g.reach();
  EdgeList pairs;
  for (Vertex u = 0; u < g.n(); ++u) {
    auto row = r.row(u);
    for (size_t wi = 0; wi < row.size(); ++wi) {
      uint64_t w = row[wi];
      while (w != 0) {
        Vertex v = static_cast<Vertex>(wi * 64 + std::countr_zero(w));
        w &= w - 1;
        if (v != u) pairs.push_back({u, v});
      }
    }
  }
  return pairs;
}

Digraph tc_graph(const Digraph& g) { return Digraph(g.n(), comparable_pairs(g)); }

Digraph transitive_reduction(const Digraph& g) {
  const auto& topo = g.topological_order();
  std::vector<int> pos(g.n());
  for (int i = 0; i < g.n(); ++i) pos[topo[i]] = i;
  const ReachMatrix& r = g.reach();
  EdgeList kept;
  std::vector<uint64_t> covered((g.n() + 63) / 64);
  std::vector<Vertex> nbrs;
  for (Vertex u = 0; u < g.n(); ++u) {
    nbrs.assign(g.out(u).begin(), g.out(u).end());
    std::sort(nbrs.begin(), nbrs.end(),
              [&](Vertex a, Vertex b) { return pos[a] < pos[b]; });
    std::fill(covered.begin(), covered.end(), 0);
    for (Vertex w : nbrs) {
      if ((covered[w >> 6] >> (w & 63)) & 1) continue;
      kept.push_back({u, w});
      auto wrow = r.row(w);
      for (size_t i = 0; i < covered.size(); ++i) covered[i] |= wrow[i];
    }
  }
  normalize_edges(kept);
  return Digraph(g.n(), std::move(kept));
}

Condensation condense_scc(const Digraph& g) {
  const int n = g.n();
  // Iterative Tarjan.
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, size_t>> call;
  int next_index = 0, ncomp = 0;
  for (Vertex s = 0; s < n; ++s) {
    if (index[s] != -1) continue;
    call.push_back({s, 0});
    index[s] = low[s] = next_index++;
    stack.push_back(s);
    on_stack[s] = 1;
    while (!call.empty()) {
      auto& [v, i] = call.back();
      auto nb = g.out(v);
      if (i < nb.size()) {
        Vertex w = nb[i++];
        if (index[w] == -1) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      } else {
        Vertex done = v;
        call.pop_back();
        if (!call.empty()) {
          Vertex parent = call.back().first;
          low[parent] = std::min(low[parent], low[done]);
        }
        if (low[done] == index[done]) {
          Vertex x;
          do {
            x = stack.back();
            stack.pop_back();
            on_stack[x] = 0;
            comp[x] = ncomp;
          } while (x != done);
          ++ncomp;
        }
      }
    }
  }
  // Renumber by smallest member.
  std::vector<Vertex> min_member(ncomp, n);
  for (Vertex v = 0; v < n; ++v) min_member[comp[v]] = std::min(min_member[comp[v]], v);
  std::vector<int> order(ncomp);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return min_member[a] < min_member[b]; });
  std::vector<int> rename(ncomp);
  for (int i = 0; i < ncomp; ++i) rename[order[i]] = i;

  Condensation c;
  c.component.resize(n);
  c.members.assign(ncomp, {});
  for (Vertex v = 0; v < n; ++v) {
    c.component[v] = rename[comp[v]];
    c.members[c.component[v]].push_back(v);
  }
  EdgeList dag_edges;
  for (const Edge& e : g.edges()) {
    int a = c.component[e.u], b = c.component[e.v];
    if (a != b) dag_edges.push_back({a, b});
  }
  normalize_edges(dag_edges);
  c.dag = Digraph(ncomp, std::move(dag_edges));
  return c;
}

// Distances.

std::vector<int> bfs_distances(const Digraph& g, Vertex s, int max_depth,
                               bool reverse) {
  std::vector<int> dist(g.n(), kUnreachable);
  std::vector<Vertex> queue{s};
  dist[s] = 0;
  for (size_t head = 0; head < queue.size(); ++head) {
    Vertex u = queue[head];
    if (dist[u] >= max_depth) continue;
    for (Vertex w : reverse ? g.in(u) : g.out(u)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::vector<int> all_pairs_distances(const Digraph& g) {
  const int n = g.n();
  std::vector<int> d(static_cast<size_t>(n) * n);
  for (Vertex u = 0; u < n; ++u) {
    auto row = bfs_distances(g, u);
    std::copy(row.begin(), row.end(), d.begin() + static_cast<size_t>(u) * n);
  }
  return d;
}

int comparable_diameter(const Digraph& g) {
  int best = 0;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (int d : bfs_distances(g, u)) best = std::max(best, d);
  }
  return best;
}

// Verification.

std::string Violation::to_string() const {
  return std::string(kind == Kind::kForeignEdge ? "foreign edge " : "pair ") +
         "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

namespace {

// Depth-limited BFS in H from u with a stamp array; calls visit(v) for every
// v != u found within distance k.
class BallSearch {
 public:
  BallSearch(int n, const Csr& h) : h_(h), stamp_(n, -1), dist_(n, 0) {}

  template <typename Visit>
  void run(Vertex u, int k, Visit&& visit) {
    queue_.clear();
    queue_.push_back(u);
    stamp_[u] = u;
    dist_[u] = 0;
    for (size_t head = 0; head < queue_.size(); ++head) {
      Vertex x = queue_[head];
      if (dist_[x] >= k) continue;
      for (int64_t i = h_.offsets[x]; i < h_.offsets[x + 1]; ++i) {
        Vertex y = h_.targets[i];
        if (stamp_[y] == u) continue;
        stamp_[y] = u;
        dist_[y] = dist_[x] + 1;
        queue_.push_back(y);
        visit(y);
      }
    }
  }

  bool seen(Vertex u, Vertex v) const { return stamp_[v] == u; }

 private:
  const Csr& h_;
  std::vector<Vertex> stamp_;
  std::vector<int> dist_;
  std::vector<Vertex> queue_;
};

void check_endpoints(int n, const EdgeList& h) {
  for (const Edge& e : h) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kInvalidArgument, "spanner edge out of range");
    }
  }
}

// Smallest v reachable from u in G but not within distance k in H, or -1.
Vertex smallest_missing(const Digraph& g, BallSearch& ball, Vertex u, int k) {
  ball.run(u, k, [](Vertex) {});
  auto dist = bfs_distances(g, u);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v != u && dist[v] != kUnreachable && !ball.seen(u, v)) return v;
  }
  return -1;
}

}  // namespace

VerifyReport verify_spanner(const Digraph& g, const EdgeList& h, int k) {
  const int n = g.n();
  check_endpoints(n, h);
  EdgeList hs = h;
  normalize_edges(hs);
  Csr hcsr = build_csr(n, hs, false);

  Condensation c = condense_scc(g);
  const int nc = c.dag.n();
  const auto& ctopo = c.dag.topological_order();

  // Blocked pass over target vertices: per-vertex reach counts and foreign
  // edges, without materializing the full matrix.
  std::vector<int64_t> reach_count(n, 0);
  std::vector<size_t> by_target(hs.size());
  std::iota(by_target.begin(), by_target.end(), 0);
  std::stable_sort(by_target.begin(), by_target.end(),
                   [&](size_t a, size_t b) { return hs[a].v < hs[b].v; });
  std::optional<Edge> first_foreign;
  size_t fi = 0;
  for (int b0 = 0; b0 < n; b0 += kVerifyBlock) {
    const int b1 = std::min(n, b0 + kVerifyBlock);
    const int words = (b1 - b0 + 63) / 64;
    std::vector<uint64_t> closed(static_cast<size_t>(nc) * words, 0);
    for (auto it = ctopo.rbegin(); it != ctopo.rend(); ++it) {
      int cid = *it;
      uint64_t* row = closed.data() + static_cast<size_t>(cid) * words;
      for (Vertex x : c.members[cid]) {
        if (x >= b0 && x < b1) row[(x - b0) >> 6] |= uint64_t{1} << ((x - b0) & 63);
      }
      for (int d : c.dag.out(cid)) {
        const uint64_t* drow = closed.data() + static_cast<size_t>(d) * words;
        for (int i = 0; i < words; ++i) row[i] |= drow[i];
      }
    }
    for (Vertex u = 0; u < n; ++u) {
      const uint64_t* row = closed.data() + static_cast<size_t>(c.component[u]) * words;
      int64_t cnt = 0;
      for (int i = 0; i < words; ++i) cnt += std::popcount(row[i]);
      if (u >= b0 && u < b1) --cnt;
      reach_count[u] += cnt;
    }
    for (; fi < by_target.size() && hs[by_target[fi]].v < b1; ++fi) {
      const Edge& e = hs[by_target[fi]];
      const uint64_t* row =
          closed.data() + static_cast<size_t>(c.component[e.u]) * words;
      int bit = e.v - b0;
      bool in_tc = e.u != e.v && ((row[bit >> 6] >> (bit & 63)) & 1);
      if (!in_tc && (!first_foreign || e < *first_foreign)) first_foreign = e;
    }
  }

  BallSearch ball(n, hcsr);
  VerifyReport report;
  if (!first_foreign) {
    for (Vertex u = 0; u < n; ++u) {
      int64_t cnt = 0;
      ball.run(u, k, [&](Vertex) { ++cnt; });
      if (cnt != reach_count[u]) {
        report.valid = false;
        report.violation = Violation{Violation::Kind::kMissingPair, u,
                                     smallest_missing(g, ball, u, k)};
        return report;
      }
    }
    return report;
  }
  // With a foreign edge the counting shortcut is unsound; check explicitly up
  // to the foreign edge's source.
  report.valid = false;
  for (Vertex u = 0; u <= first_foreign->u; ++u) {
    Vertex v = smallest_missing(g, ball, u, k);
    if (u == first_foreign->u) {
      if (v != -1 && v < first_foreign->v) {
        report.violation = Violation{Violation::Kind::kMissingPair, u, v};
      } else {
        report.violation = Violation{Violation::Kind::kForeignEdge, u,
                                     first_foreign->v};
      }
      return report;
    }
    if (v != -1) {
      report.violation = Violation{Violation::Kind::kMissingPair, u, v};
      return report;
    }
  }
  return report;
}

VerifyReport verify_pairs(int n, const EdgeList& h, const EdgeList& pairs,
                          int k) {
  check_endpoints(n, h);
  check_endpoints(n, pairs);
  EdgeList hs = h;
  normalize_edges(hs);
  Csr hcsr = build_csr(n, hs, false);
  EdgeList ps = pairs;
  normalize_edges(ps);
  BallSearch ball(n, hcsr);
  VerifyReport report;
  Vertex current = -1;
  for (const Edge& p : ps) {
    if (p.u == p.v) continue;
    if (p.u != current) {
      current = p.u;
      ball.run(current, k, [](Vertex) {});
    }
    if (!ball.seen(current, p.v)) {
      report.valid = false;
      report.violation = Violation{Violation::Kind::kMissingPair, p.u, p.v};
      return report;
    }
  }
  return report;
}

void finalize_stats(const Digraph& g, SpannerResult& r) {
  normalize_edges(r.edges);
  r.stats.size = static_cast<int64_t>(r.edges.size());
  r.stats.shortcut_count = 0;
  for (const Edge& e : r.edges) {
    if (!g.has_edge(e.u, e.v)) ++r.stats.shortcut_count;
  }
}

}  // namespace tcspan
