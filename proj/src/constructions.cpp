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

#include "tcspan/constructions.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <queue>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "tcspan/generators.hpp"

namespace tcspan {

using boost::multiprecision::cpp_int;

namespace {

constexpr int64_t kMaxAckermannBits = int64_t{1} << 20;
constexpr uint64_t kSaturated = ~uint64_t{0};

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

// A(i, j) clamped to kSaturated, which stands for any value >= 2^64 - 1.
uint64_t saturated_ackermann(int i, uint64_t j) {
  if (j == kSaturated) return kSaturated;
  if (i == 1) return j >= 64 ? kSaturated : uint64_t{1} << j;
  if (j == 0) return saturated_ackermann(i - 1, 1);
  uint64_t prev = saturated_ackermann(i, j - 1);
  if (prev >= 6) return kSaturated;
  return saturated_ackermann(i - 1, uint64_t{1} << (uint64_t{1} << prev));
}

}  // namespace

cpp_int ackermann(int i, int64_t j) {
  if (i < 1 || j < 0) {
    throw Error(ErrorCode::kInvalidArgument, "ackermann needs i >= 1, j >= 0");
  }
  if (i == 1) {
    if (j > kMaxAckermannBits) {
      throw Error(ErrorCode::kOverflow, "A(1, j) exceeds the bit cap");
    }
    return cpp_int(1) << static_cast<unsigned>(j);
  }
  if (j == 0) return ackermann(i - 1, 1);
  cpp_int prev = ackermann(i, j - 1);
  if (prev > 5) {
    throw Error(ErrorCode::kOverflow,
                "A(" + std::to_string(i) + ", " + std::to_string(j) +
                    ") exceeds the bit cap");
  }
  const int64_t e = int64_t{1} << prev.convert_to<int>();
  return ackermann(i - 1, int64_t{1} << e);
}

int lambda_k(int i, uint64_t n) {
  if (i < 1) throw Error(ErrorCode::kInvalidArgument, "lambda_k needs i >= 1");
  for (int j = 0;; ++j) {
    if (saturated_ackermann(i, static_cast<uint64_t>(j)) >= n) return j;
  }
}

int alpha(uint64_t n) {
  for (int i = 1;; ++i) {
    if (saturated_ackermann(i, 1) >= n) return i;
  }
}

// ---------------------------------------------------------------------------
// Ladders.

namespace {

EdgeList line_edges(int n, int k);

int64_t cached_line_size(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, int64_t> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
  }
  int64_t size = static_cast<int64_t>(line_edges(n, k).size());
  std::lock_guard<std::mutex> lock(mu);
  cache[{n, k}] = size;
  return size;
}

int ceil_log2(int64_t x) {
  int r = 0;
  while ((int64_t{1} << r) < x) ++r;
  return r;
}

}  // namespace

int LadderConfig::cut(int len) const {
  if (len <= 1) return 1;
  if (k <= 2) return (len + 1) / 2;
  if (k == 3) {
    int c = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(len))));
    while (static_cast<int64_t>(c - 1) * (c - 1) >= len) --c;
    while (static_cast<int64_t>(c) * c < len) ++c;
    return c;
  }
  if (k == 4) return std::max(1, ceil_log2(len));
  for (int c = 2; c < len; ++c) {
    if (cached_line_size((len + c - 1) / c, k - 2) <= 2 * int64_t{len}) {
      return c;
    }
  }
  return len;
}

PathLadder::PathLadder(int m, int k) : m_(m), k_(k) {
  if (m < 0 || k < 2) {
    throw Error(ErrorCode::kInvalidArgument, "ladder needs m >= 0, k >= 2");
  }
  if (m > 0) build(0, m, 1);
  std::sort(inner_.begin(), inner_.end());
  inner_.erase(std::unique(inner_.begin(), inner_.end()), inner_.end());
}

int PathLadder::build(int begin, int end, int level) {
  if (end <= begin) return -1;
  depth_ = std::max(depth_, level);
  const int id = static_cast<int>(segments_.size());
  segments_.push_back({});
  std::vector<int> hubs;
  const int len = end - begin;
  if (k_ == 2) {
    hubs.push_back(begin + (len - 1) / 2);
  } else {
    const int c = LadderConfig{k_}.cut(len);
    for (int p = begin + c - 1; p < end; p += c) hubs.push_back(p);
    if (hubs.empty() || hubs.back() != end - 1) hubs.push_back(end - 1);
    const int r = static_cast<int>(hubs.size());
    if (r >= 2 && hubs.back() - hubs.front() > k_ - 2) {
      for (const Edge& e : line_edges(r, k_ - 2)) {
        inner_.push_back({hubs[e.u], hubs[e.v]});
      }
    }
  }
  std::vector<int> children;
  int prev = begin;
  for (int h : hubs) {
    children.push_back(build(prev, h, level + 1));
    prev = h + 1;
  }
  children.push_back(build(prev, end, level + 1));
  Segment& s = segments_[id];
  s.begin = begin;
  s.end = end;
  s.hubs = std::move(hubs);
  s.children = std::move(children);
  return id;
}

std::vector<int> PathLadder::forward_hubs(int y) const {
  std::vector<int> out;
  int seg = segments_.empty() ? -1 : 0;
  while (seg >= 0) {
    const Segment& s = segments_[seg];
    auto it = std::lower_bound(s.hubs.begin(), s.hubs.end(), y);
    if (it != s.hubs.end()) {
      out.push_back(*it);
      if (*it == y) break;
    }
    seg = s.children[it - s.hubs.begin()];
  }
  return out;
}

std::vector<int> PathLadder::backward_hubs(int y) const {
  std::vector<int> out;
  int seg = segments_.empty() ? -1 : 0;
  while (seg >= 0) {
    const Segment& s = segments_[seg];
    auto it = std::lower_bound(s.hubs.begin(), s.hubs.end(), y);
    if (it != s.hubs.end() && *it == y) {
      out.push_back(y);
      break;
    }
    if (it != s.hubs.begin()) out.push_back(*(it - 1));
    seg = s.children[it - s.hubs.begin()];
  }
  return out;
}

namespace {

EdgeList line_edges(int n, int k) {
  EdgeList out;
  if (n <= 1) return out;
  if (k == 1) {
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) out.push_back({u, v});
    return out;
  }
  if (k >= n - 1) {
    for (int u = 0; u + 1 < n; ++u) out.push_back({u, u + 1});
    return out;
  }
  PathLadder ladder(n, k);
  for (auto [a, b] : ladder.inner_edges()) out.push_back({a, b});
  for (int u = 0; u + 1 < n; ++u) out.push_back({u, u + 1});
  for (int u = 0; u < n; ++u) {
    for (int h : ladder.forward_hubs(u))
      if (h != u) out.push_back({u, h});
    for (int h : ladder.backward_hubs(u))
      if (h != u) out.push_back({h, u});
  }
  normalize_edges(out);
  return out;
}

}  // namespace

SpannerResult line_spanner(int n, int k) {
  if (n < 1 || k < 2) {
    throw Error(ErrorCode::kInvalidArgument, "line_spanner needs n >= 1, k >= 2");
  }
  const auto t0 = std::chrono::steady_clock::now();
  SpannerResult r;
  r.k = k;
  r.edges = line_edges(n, k);
  r.stats.algorithm = "line";
  finalize_stats(gen_line(n), r);
  r.stats.runtime_ms = elapsed_ms(t0);
  return r;
}

// ---------------------------------------------------------------------------
// Trees.

namespace {

// Root of an out-tree; throws kNotATree otherwise.
Vertex check_out_tree(const Digraph& t) {
  const int n = t.n();
  if (n < 1 || t.m() != n - 1) {
    throw Error(ErrorCode::kNotATree, "an out-tree on n vertices has n-1 edges");
  }
  Vertex root = -1;
  for (Vertex v = 0; v < n; ++v) {
    if (t.in(v).size() > 1) {
      throw Error(ErrorCode::kNotATree,
                  "vertex " + std::to_string(v) + " has two parents");
    }
    if (t.in(v).empty()) {
      if (root >= 0) throw Error(ErrorCode::kNotATree, "more than one root");
      root = v;
    }
  }
  if (root < 0) throw Error(ErrorCode::kNotATree, "no root");
  std::vector<Vertex> stack = {root};
  int seen = 0;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    ++seen;
    for (Vertex w : t.out(v)) stack.push_back(w);
  }
  if (seen != n) throw Error(ErrorCode::kNotATree, "not connected");
  return root;
}

EdgeList centroid_tree_edges(const Digraph& t) {
  const int n = t.n();
  EdgeList out;
  std::vector<bool> alive(n, true);
  std::vector<int> size(n, 0);
  std::vector<Vertex> order, stack;
  std::vector<Vertex> from(n, -1);
  std::vector<Vertex> work = {0};
  while (!work.empty()) {
    Vertex start = work.back();
    work.pop_back();
    // Component of start in the underlying forest of alive vertices.
    order.clear();
    stack = {start};
    from[start] = -1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      order.push_back(v);
      auto visit = [&](Vertex w) {
        if (alive[w] && w != from[v]) {
          from[w] = v;
          stack.push_back(w);
        }
      };
      for (Vertex w : t.out(v)) visit(w);
      for (Vertex w : t.in(v)) visit(w);
    }
    const int total = static_cast<int>(order.size());
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      size[*it] = 1;
      for (Vertex w : t.out(*it))
        if (alive[w] && from[w] == *it) size[*it] += size[w];
      for (Vertex w : t.in(*it))
        if (alive[w] && from[w] == *it) size[*it] += size[w];
    }
    Vertex c = -1;
    int best = total + 1;
    for (Vertex v : order) {
      int worst = total - size[v];
      for (Vertex w : t.out(v))
        if (alive[w] && from[w] == v) worst = std::max(worst, size[w]);
      for (Vertex w : t.in(v))
        if (alive[w] && from[w] == v) worst = std::max(worst, size[w]);
      if (worst < best || (worst == best && v < c)) {
        best = worst;
        c = v;
      }
    }
    for (Vertex a = c; !t.in(a).empty() && alive[t.in(a)[0]];) {
      a = t.in(a)[0];
      out.push_back({a, c});
    }
    stack = {c};
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : t.out(v)) {
        if (!alive[w]) continue;
        out.push_back({c, w});
        stack.push_back(w);
      }
    }
    alive[c] = false;
    for (Vertex w : t.out(c))
      if (alive[w]) work.push_back(w);
    for (Vertex w : t.in(c))
      if (alive[w]) work.push_back(w);
  }
  normalize_edges(out);
  return out;
}

EdgeList heavy_path_tree_edges(const Digraph& t, Vertex root, int k) {
  const int n = t.n();
  std::vector<Vertex> order = {root}, parent(n, -1);
  for (size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : t.out(order[i])) {
      parent[w] = order[i];
      order.push_back(w);
    }
  }
  std::vector<int> size(n, 1);
  std::vector<Vertex> heavy(n, -1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    for (Vertex w : t.out(v)) {
      size[v] += size[w];
      if (heavy[v] < 0 || size[w] > size[heavy[v]]) heavy[v] = w;
    }
  }
  EdgeList out;
  std::vector<Vertex> head(n, -1);
  for (Vertex v : order) {
    if (head[v] >= 0) continue;
    std::vector<Vertex> path;
    for (Vertex x = v; x >= 0; x = heavy[x]) {
      head[x] = v;
      path.push_back(x);
    }
    for (const Edge& e : line_edges(static_cast<int>(path.size()), k - 1)) {
      out.push_back({path[e.u], path[e.v]});
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex x = v; parent[head[x]] >= 0;) {
      x = parent[head[x]];
      out.push_back({x, v});
    }
  }
  normalize_edges(out);
  return out;
}

}  // namespace

SpannerResult tree_spanner(const Digraph& t, int k) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "tree_spanner needs k >= 2");
  const auto t0 = std::chrono::steady_clock::now();
  const Vertex root = check_out_tree(t);
  SpannerResult r;
  r.k = k;
  r.stats.algorithm = "tree";
  bool is_path = true;
  for (Vertex v = 0; v < t.n(); ++v) is_path = is_path && t.out(v).size() <= 1;
  if (is_path) {
    std::vector<Vertex> path = {root};
    while (!t.out(path.back()).empty()) path.push_back(t.out(path.back())[0]);
    for (const Edge& e : line_edges(t.n(), k)) {
      r.edges.push_back({path[e.u], path[e.v]});
    }
  } else {
    r.edges = centroid_tree_edges(t);
    if (k >= 3) {
      EdgeList heavy = heavy_path_tree_edges(t, root, k);
      if (heavy.size() < r.edges.size()) r.edges = std::move(heavy);
    }
  }
  finalize_stats(t, r);
  r.stats.runtime_ms = elapsed_ms(t0);
  return r;
}

// ---------------------------------------------------------------------------
// Level decomposition and spanning trees.

std::vector<Vertex> LevelDecomposition::group(int i) const {
  if (t() == 0) return levels[0];
  std::vector<Vertex> out = levels[i - 1];
  out.insert(out.end(), levels[i].begin(), levels[i].end());
  std::sort(out.begin(), out.end());
  return out;
}

LevelDecomposition level_decompose(const Digraph& g, Vertex root) {
  const int n = g.n();
  if (n < 1 || root < 0 || root >= n) {
    throw Error(ErrorCode::kInvalidArgument, "root out of range");
  }
  if (!g.is_dag()) throw Error(ErrorCode::kNotADag, "level_decompose needs a DAG");
  LevelDecomposition d;
  d.root = root;
  d.level.assign(n, -1);
  std::vector<Vertex> queue = {root};
  d.level[root] = 0;
  for (size_t i = 0; i < queue.size(); ++i) {
    for (Vertex w : g.out(queue[i])) {
      if (d.level[w] < 0) {
        d.level[w] = 0;
        queue.push_back(w);
      }
    }
  }
  int assigned = static_cast<int>(queue.size());
  std::sort(queue.begin(), queue.end());
  d.levels.push_back(queue);
  for (int lv = 1; assigned < n; ++lv) {
    // Odd levels reach the assigned set, even levels are reached from it;
    // only the previous level can contribute new vertices.
    queue = d.levels.back();
    const size_t sources = queue.size();
    for (size_t i = 0; i < queue.size(); ++i) {
      auto nbrs = lv % 2 == 1 ? g.in(queue[i]) : g.out(queue[i]);
      for (Vertex w : nbrs) {
        if (d.level[w] < 0) {
          d.level[w] = lv;
          queue.push_back(w);
        }
      }
    }
    std::vector<Vertex> fresh(queue.begin() + static_cast<std::ptrdiff_t>(sources),
                              queue.end());
    if (fresh.empty()) {
      throw Error(ErrorCode::kDisconnected, "underlying graph is disconnected");
    }
    assigned += static_cast<int>(fresh.size());
    std::sort(fresh.begin(), fresh.end());
    d.levels.push_back(std::move(fresh));
  }
  return d;
}

RootedTree build_spanning_tree(const Digraph& g, const LevelDecomposition& d) {
  const int n = g.n();
  RootedTree t;
  t.root = d.root;
  t.parent.assign(n, -1);
  t.down.assign(n, false);
  t.depth.assign(n, 0);
  std::vector<bool> seen(n, false);
  seen[d.root] = true;
  std::vector<Vertex> queue = {d.root};
  for (size_t i = 0; i < queue.size(); ++i) {
    Vertex v = queue[i];
    for (Vertex w : g.out(v)) {
      if (!seen[w] && d.level[w] == 0) {
        seen[w] = true;
        t.parent[w] = v;
        t.down[w] = true;
        t.depth[w] = t.depth[v] + 1;
        queue.push_back(w);
      }
    }
  }
  for (int lv = 1; lv <= d.t(); ++lv) {
    const bool odd = lv % 2 == 1;
    queue = d.levels[lv - 1];
    for (size_t i = 0; i < queue.size(); ++i) {
      Vertex v = queue[i];
      for (Vertex w : odd ? g.in(v) : g.out(v)) {
        if (!seen[w] && d.level[w] == lv) {
          seen[w] = true;
          t.parent[w] = v;
          t.down[w] = !odd;
          t.depth[w] = t.depth[v] + 1;
          queue.push_back(w);
        }
      }
    }
  }
  return t;
}

RootedTree bfs_spanning_tree(const Digraph& g, Vertex root) {
  const int n = g.n();
  RootedTree t;
  t.root = root;
  t.parent.assign(n, -1);
  t.down.assign(n, false);
  t.depth.assign(n, 0);
  std::vector<bool> seen(n, false);
  seen[root] = true;
  std::vector<Vertex> queue = {root};
  for (size_t i = 0; i < queue.size(); ++i) {
    Vertex v = queue[i];
    auto visit = [&](Vertex w, bool down) {
      if (seen[w]) return;
      seen[w] = true;
      t.parent[w] = v;
      t.down[w] = down;
      t.depth[w] = t.depth[v] + 1;
      queue.push_back(w);
    };
    for (Vertex w : g.out(v)) visit(w, true);
    for (Vertex w : g.in(v)) visit(w, false);
  }
  if (static_cast<int>(queue.size()) != n) {
    throw Error(ErrorCode::kDisconnected, "underlying graph is disconnected");
  }
  return t;
}

std::vector<Vertex> tree_path_up(const RootedTree& t, Vertex v, Vertex a) {
  std::vector<Vertex> out = {v};
  while (v != a) {
    v = t.parent[v];
    if (v < 0) throw Error(ErrorCode::kInvalidArgument, "not an ancestor");
    out.push_back(v);
  }
  return out;
}

std::vector<std::vector<Vertex>> split_dipaths(const Digraph& g,
                                               const std::vector<Vertex>& path) {
  std::vector<std::vector<Vertex>> out;
  size_t i = 0;
  while (i < path.size()) {
    std::vector<Vertex> run = {path[i]};
    int dir = 0;  // +1 along the list, -1 against it
    size_t j = i;
    while (j + 1 < path.size()) {
      int d = g.has_edge(path[j], path[j + 1])   ? 1
              : g.has_edge(path[j + 1], path[j]) ? -1
                                                 : 0;
      if (d == 0 || (dir != 0 && d != dir)) break;
      dir = d;
      run.push_back(path[++j]);
    }
    if (dir < 0) std::reverse(run.begin(), run.end());
    out.push_back(std::move(run));
    i = j + 1;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Separators.

std::string_view ProviderName(SeparatorProvider p) {
  return p == SeparatorProvider::kTree ? "tree" : "planar";
}

SeparatorProvider ParseProvider(std::string_view s) {
  if (s == "tree") return SeparatorProvider::kTree;
  if (s == "planar") return SeparatorProvider::kPlanar;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown provider '" + std::string(s) + "'");
}

namespace {

// Components of the underlying graph of g restricted to vertices with
// !removed[v], each sorted, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Digraph& g,
                                            const std::vector<bool>& removed,
                                            const std::vector<Vertex>& within) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.n(), false);
  std::vector<bool> inside(g.n(), false);
  for (Vertex v : within) inside[v] = true;
  for (Vertex s : within) {
    if (removed[s] || seen[s]) continue;
    std::vector<Vertex> comp = {s};
    seen[s] = true;
    for (size_t i = 0; i < comp.size(); ++i) {
      auto visit = [&](Vertex w) {
        if (inside[w] && !removed[w] && !seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      };
      for (Vertex w : g.out(comp[i])) visit(w);
      for (Vertex w : g.in(comp[i])) visit(w);
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<Vertex> iota_vertices(int n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

// Largest remaining component when the listed vertices are removed.
class BalanceProbe {
 public:
  explicit BalanceProbe(const Digraph& g)
      : g_(g), stamp_(g.n(), 0), removed_(g.n(), 0) {}

  int largest_after(const std::vector<std::vector<Vertex>>& paths) {
    ++epoch_;
    for (const auto& p : paths)
      for (Vertex v : p) removed_[v] = epoch_;
    int best = 0;
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < g_.n(); ++s) {
      if (removed_[s] == epoch_ || stamp_[s] == epoch_) continue;
      queue = {s};
      stamp_[s] = epoch_;
      for (size_t i = 0; i < queue.size(); ++i) {
        auto visit = [&](Vertex w) {
          if (removed_[w] != epoch_ && stamp_[w] != epoch_) {
            stamp_[w] = epoch_;
            queue.push_back(w);
          }
        };
        for (Vertex w : g_.out(queue[i])) visit(w);
        for (Vertex w : g_.in(queue[i])) visit(w);
      }
      best = std::max(best, static_cast<int>(queue.size()));
    }
    return best;
  }

 private:
  const Digraph& g_;
  std::vector<int> stamp_;
  std::vector<int> removed_;
  int epoch_ = 0;
};

Vertex tree_centroid(const RootedTree& t) {
  const int n = static_cast<int>(t.parent.size());
  std::vector<Vertex> order = iota_vertices(n);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return t.depth[a] > t.depth[b];
  });
  std::vector<int> size(n, 1), heaviest(n, 0);
  for (Vertex v : order) {
    if (t.parent[v] >= 0) {
      size[t.parent[v]] += size[v];
      heaviest[t.parent[v]] = std::max(heaviest[t.parent[v]], size[v]);
    }
  }
  Vertex best = 0;
  int best_worst = n + 1;
  for (Vertex v = 0; v < n; ++v) {
    int worst = std::max(heaviest[v], n - size[v]);
    if (worst < best_worst) {
      best_worst = worst;
      best = v;
    }
  }
  return best;
}

Vertex tree_lca(const RootedTree& t, Vertex a, Vertex b) {
  while (t.depth[a] > t.depth[b]) a = t.parent[a];
  while (t.depth[b] > t.depth[a]) b = t.parent[b];
  while (a != b) {
    a = t.parent[a];
    b = t.parent[b];
  }
  return a;
}

constexpr int kMaxCycleCandidates = 256;

bool underlying_is_planar(const Digraph& g) {
  using UGraph =
      boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  UGraph ug(g.n());
  for (const Edge& e : g.edges()) {
    if (e.u < e.v || !g.has_edge(e.v, e.u)) boost::add_edge(e.u, e.v, ug);
  }
  return boost::boyer_myrvold_planarity_test(ug);
}

bool underlying_is_forest(const Digraph& g) {
  std::vector<Vertex> uf = iota_vertices(g.n());
  auto find = [&](Vertex x) {
    while (uf[x] != x) x = uf[x] = uf[uf[x]];
    return x;
  };
  for (const Edge& e : g.edges()) {
    Vertex a = find(e.u), b = find(e.v);
    if (a == b) return false;
    uf[a] = b;
  }
  return true;
}

void check_provider(const Digraph& g, SeparatorProvider provider) {
  if (provider == SeparatorProvider::kPlanar && !underlying_is_planar(g)) {
    throw Error(ErrorCode::kNotPlanar, "underlying graph is not planar");
  }
  if (provider == SeparatorProvider::kTree && !underlying_is_forest(g)) {
    throw Error(ErrorCode::kNotATree, "underlying graph is not a forest");
  }
}

struct Induced {
  Digraph g;
  std::vector<Vertex> global;  // local -> global
};

// `vertices` sorted; `local` is scratch of size g.n() filled with -1.
Induced induce(const Digraph& g, const std::vector<Vertex>& vertices,
               std::vector<Vertex>& local) {
  for (size_t i = 0; i < vertices.size(); ++i) {
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  EdgeList edges;
  for (Vertex v : vertices) {
    for (Vertex w : g.out(v)) {
      if (local[w] >= 0) edges.push_back({local[v], local[w]});
    }
  }
  for (Vertex v : vertices) local[v] = -1;
  std::sort(edges.begin(), edges.end());
  return {Digraph(static_cast<int>(vertices.size()), std::move(edges)), vertices};
}

}  // namespace

SeparatorRound separator_round(const Digraph& g, const RootedTree& t,
                               SeparatorProvider provider) {
  SeparatorRound round;
  round.component_size = g.n();
  BalanceProbe probe(g);
  std::vector<std::vector<Vertex>> best = {{tree_centroid(t)}};
  int best_largest = probe.largest_after(best);
  size_t best_size = 1;
  if (provider == SeparatorProvider::kPlanar) {
    EdgeList non_tree;
    for (const Edge& e : g.edges()) {
      if (t.parent[e.v] != e.u && t.parent[e.u] != e.v) non_tree.push_back(e);
    }
    const size_t stride =
        std::max<size_t>(1, (non_tree.size() + kMaxCycleCandidates - 1) /
                                kMaxCycleCandidates);
    for (size_t i = 0; i < non_tree.size(); i += stride) {
      const Edge& e = non_tree[i];
      Vertex a = tree_lca(t, e.u, e.v);
      std::vector<std::vector<Vertex>> cand = {tree_path_up(t, e.u, a)};
      if (e.v != a) {
        std::vector<Vertex> second = tree_path_up(t, e.v, a);
        second.pop_back();
        cand.push_back(std::move(second));
      }
      size_t size = 0;
      for (const auto& p : cand) size += p.size();
      int largest = probe.largest_after(cand);
      if (largest < best_largest || (largest == best_largest && size < best_size)) {
        best = std::move(cand);
        best_largest = largest;
        best_size = size;
      }
    }
  }
  round.paths = std::move(best);
  round.largest_after = best_largest;
  return round;
}

MonotonePathSet path_separator(const Digraph& g, const RootedTree& t,
                               SeparatorProvider provider) {
  check_provider(g, provider);
  const int n = g.n();
  MonotonePathSet out;
  out.tree = t;
  std::vector<bool> removed(n, false);
  std::vector<Vertex> local(n, -1);
  std::vector<Vertex> cur = iota_vertices(n);
  for (bool first = true;; first = false) {
    Induced ind = induce(g, cur, local);
    RootedTree tree = first ? t : bfs_spanning_tree(ind.g, 0);
    SeparatorRound round = separator_round(ind.g, tree, provider);
    for (auto& p : round.paths) {
      for (Vertex& v : p) {
        v = ind.global[v];
        removed[v] = true;
      }
      out.paths.push_back(p);
    }
    auto comps = components(g, removed, iota_vertices(n));
    out.rounds.push_back(std::move(round));
    size_t largest = 0;
    for (size_t i = 0; i < comps.size(); ++i) {
      if (comps[i].size() > comps[largest].size()) largest = i;
    }
    if (comps.empty() || 2 * comps[largest].size() <= static_cast<size_t>(n)) {
      for (const auto& c : comps) out.component_sizes.push_back(static_cast<int>(c.size()));
      std::sort(out.component_sizes.rbegin(), out.component_sizes.rend());
      return out;
    }
    cur = comps[largest];
  }
}

// ---------------------------------------------------------------------------
// Hubs.

namespace {

bool reaches_or_equal(const ReachMatrix& r, Vertex a, Vertex b) {
  return a == b || r.reaches(a, b);
}

void add_hub_edges(const ReachMatrix& reach, const PathLadder& ladder,
                   const std::vector<Vertex>& p, Vertex v, EdgeList& out) {
  const int m = static_cast<int>(p.size());
  // v reaches a suffix of the dipath and is reached from a prefix.
  int lo = 0, hi = m;
  while (lo < hi) {
    int mid = (lo + hi) / 2;
    if (reaches_or_equal(reach, v, p[mid])) hi = mid; else lo = mid + 1;
  }
  if (lo < m) {
    for (int h : ladder.forward_hubs(lo))
      if (p[h] != v) out.push_back({v, p[h]});
  }
  lo = -1;
  hi = m - 1;
  while (lo < hi) {
    int mid = (lo + hi + 1) / 2;
    if (reaches_or_equal(reach, p[mid], v)) lo = mid; else hi = mid - 1;
  }
  if (lo >= 0) {
    for (int h : ladder.backward_hubs(lo))
      if (p[h] != v) out.push_back({p[h], v});
  }
}

void add_connect_on(const PathLadder& ladder, const std::vector<Vertex>& p,
                    EdgeList& out) {
  for (auto [a, b] : ladder.inner_edges()) out.push_back({p[a], p[b]});
}

}  // namespace

EdgeList hub_connect(const Digraph& g, Vertex v, const std::vector<Vertex>& p,
                     int k) {
  EdgeList out;
  if (p.empty()) return out;
  PathLadder ladder(static_cast<int>(p.size()), k);
  add_hub_edges(transitive_closure(g), ladder, p, v, out);
  normalize_edges(out);
  return out;
}

EdgeList connect_on(const std::vector<Vertex>& p, int k) {
  EdgeList out;
  if (p.empty()) return out;
  PathLadder ladder(static_cast<int>(p.size()), k);
  add_connect_on(ladder, p, out);
  normalize_edges(out);
  return out;
}

// ---------------------------------------------------------------------------
// Pipeline.

PathsepReport pathsep_spanner(const Digraph& g, int k,
                              SeparatorProvider provider) {
  if (k < 2) throw Error(ErrorCode::kInvalidArgument, "pathsep needs k >= 2");
  const auto t0 = std::chrono::steady_clock::now();
  const Digraph tr = transitive_reduction(g);
  check_provider(tr, provider);
  const int n = g.n();
  const ReachMatrix& reach = transitive_closure(g);
  PathsepReport rep;
  EdgeList h = tr.edges();
  std::map<int, PathLadder> ladders;
  auto ladder_for = [&](int m) -> const PathLadder& {
    auto it = ladders.find(m);
    if (it == ladders.end()) it = ladders.emplace(m, PathLadder(m, k)).first;
    return it->second;
  };
  std::vector<bool> removed(n, false);
  std::vector<Vertex> local(n, -1);
  std::vector<std::vector<Vertex>> work = components(tr, removed, iota_vertices(n));
  std::reverse(work.begin(), work.end());
  while (!work.empty()) {
    std::vector<Vertex> comp = std::move(work.back());
    work.pop_back();
    if (comp.size() <= 1) continue;
    PathsepStep step;
    step.component_size = static_cast<int>(comp.size());
    std::vector<Vertex> cur = comp;
    std::vector<std::vector<Vertex>> rest;
    for (;;) {
      Induced ind = induce(tr, cur, local);
      LevelDecomposition dec = level_decompose(ind.g, 0);
      RootedTree tree = build_spanning_tree(ind.g, dec);
      SeparatorRound round = separator_round(ind.g, tree, provider);
      ++step.rounds;
      step.paths += static_cast<int>(round.paths.size());
      std::vector<bool> in_group(ind.g.n(), false);
      for (int j = 1; j <= dec.num_groups(); ++j) {
        std::vector<Vertex> group = dec.group(j);
        for (Vertex v : group) in_group[v] = true;
        for (const auto& path : round.paths) {
          std::vector<Vertex> restricted;
          for (Vertex v : path)
            if (in_group[v]) restricted.push_back(v);
          for (auto& dip : split_dipaths(ind.g, restricted)) {
            ++step.dipaths;
            for (Vertex& v : dip) v = ind.global[v];
            const PathLadder& ladder = ladder_for(static_cast<int>(dip.size()));
            add_connect_on(ladder, dip, h);
            for (Vertex v : group) {
              add_hub_edges(reach, ladder, dip, ind.global[v], h);
            }
          }
        }
        for (Vertex v : group) in_group[v] = false;
      }
      for (const auto& path : round.paths)
        for (Vertex v : path) removed[ind.global[v]] = true;
      auto comps = components(tr, removed, cur);
      size_t largest = 0;
      for (size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].size() > comps[largest].size()) largest = i;
      }
      if (comps.empty() || 2 * comps[largest].size() <= comp.size()) {
        for (auto& c : comps) rest.push_back(std::move(c));
        break;
      }
      for (size_t i = 0; i < comps.size(); ++i) {
        if (i != largest) rest.push_back(std::move(comps[i]));
      }
      cur = std::move(comps[largest]);
    }
    for (const auto& c : rest) {
      step.largest_after = std::max(step.largest_after, static_cast<int>(c.size()));
    }
    rep.max_rounds = std::max(rep.max_rounds, step.rounds);
    rep.steps.push_back(step);
    for (auto it = rest.rbegin(); it != rest.rend(); ++it) work.push_back(std::move(*it));
    if (h.size() > 4 * static_cast<size_t>(n) + 1024) normalize_edges(h);
  }
  rep.result.k = k;
  rep.result.edges = std::move(h);
  rep.result.stats.algorithm = "pathsep-" + std::string(ProviderName(provider));
  finalize_stats(g, rep.result);
  rep.result.stats.runtime_ms = elapsed_ms(t0);
  return rep;
}

// ---------------------------------------------------------------------------
// Partial products.

ProductSkeleton build_product_skeleton(int n, const EdgeList& tree_edges, int k) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "empty tree");
  if (static_cast<int64_t>(tree_edges.size()) != n - 1) {
    throw Error(ErrorCode::kNotATree, "a tree on n vertices has n-1 edges");
  }
  std::vector<std::vector<Vertex>> adj(n);
  for (const Edge& e : tree_edges) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || e.u == e.v) {
      throw Error(ErrorCode::kNotATree, "bad tree edge");
    }
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  ProductSkeleton sk;
  sk.n = n;
  sk.k = k;
  std::vector<Vertex> parent(n, -1), order = {0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (size_t i = 0; i < order.size(); ++i) {
    std::sort(adj[order[i]].begin(), adj[order[i]].end());
    for (Vertex w : adj[order[i]]) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorCode::kNotATree, "tree is disconnected");
  }
  EdgeList edges;
  std::vector<int> children(n, 0);
  for (Vertex v = 1; v < n; ++v) {
    edges.push_back({parent[v], v});
    ++children[parent[v]];
  }
  sk.extra_child.assign(n, -1);
  int total = n;
  for (Vertex v = 0; v < n; ++v) {
    if (children[v] == 0) {
      sk.extra_child[v] = total;
      edges.push_back({v, total++});
    }
  }
  std::sort(edges.begin(), edges.end());
  sk.tree = Digraph(total, edges);
  sk.spanner = tree_spanner(sk.tree, k).edges;
  sk.parent.assign(total, -1);
  sk.depth.assign(total, 0);
  sk.tin.assign(total, 0);
  sk.tout.assign(total, 0);
  int clock = 0;
  std::vector<std::pair<Vertex, size_t>> stack = {{0, 0}};
  sk.tin[0] = clock++;
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    auto out = sk.tree.out(v);
    if (i < out.size()) {
      Vertex w = out[i++];
      sk.parent[w] = v;
      sk.depth[w] = sk.depth[v] + 1;
      sk.tin[w] = clock++;
      stack.push_back({w, 0});
    } else {
      sk.tout[v] = clock++;
      stack.pop_back();
    }
  }
  sk.out_.assign(total, {});
  for (const Edge& e : sk.spanner) sk.out_[e.u].push_back(e.v);
  return sk;
}

Vertex ProductSkeleton::any_child(Vertex v) const {
  if (extra_child[v] >= 0) return extra_child[v];
  return tree.out(v)[0];
}

Vertex ProductSkeleton::child_toward(Vertex a, Vertex b) const {
  while (parent[b] != a) b = parent[b];
  return b;
}

Vertex ProductSkeleton::lca(Vertex a, Vertex b) const {
  while (depth[a] > depth[b]) a = parent[a];
  while (depth[b] > depth[a]) b = parent[b];
  while (a != b) {
    a = parent[a];
    b = parent[b];
  }
  return a;
}

std::vector<Vertex> ProductSkeleton::hops(Vertex a, Vertex b) const {
  // Spanner edges point down the tree, so every a-b path stays on the tree
  // path between them.
  std::map<Vertex, Vertex> from = {{a, -1}};
  std::vector<Vertex> queue = {a};
  for (size_t i = 0; i < queue.size() && !from.count(b); ++i) {
    for (Vertex w : out_[queue[i]]) {
      if (is_ancestor(w, b) && !from.count(w)) {
        from[w] = queue[i];
        queue.push_back(w);
      }
    }
  }
  std::vector<Vertex> path;
  for (Vertex x = b; x >= 0; x = from.at(x)) path.push_back(x);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace tcspan
