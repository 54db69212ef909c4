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

#include "tcspan/generators.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>

#include "tcspan/common.hpp"

namespace tcspan {

namespace {

constexpr int64_t kMaxVertices = int64_t{1} << 24;
constexpr int64_t kMaxEdges = int64_t{1} << 26;

// Ceiling that ignores floating-point noise just above an integer.
int64_t ceil_clean(double x) { return static_cast<int64_t>(std::ceil(x - 1e-9)); }

void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

void check_size(int64_t vertices, int64_t edges) {
  if (vertices > kMaxVertices || edges > kMaxEdges) {
    throw Error(ErrorCode::kTooLarge,
                "instance with " + std::to_string(vertices) + " vertices and " +
                    std::to_string(edges) + " edges exceeds the size cap");
  }
}

// Saturating integer power; returns -1 past `limit`.
int64_t ipow(int64_t base, int exp, int64_t limit) {
  int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > limit / base) return -1;
    r *= base;
  }
  return r;
}

int64_t cross(const std::pair<int64_t, int64_t>& o,
              const std::pair<int64_t, int64_t>& a,
              const std::pair<int64_t, int64_t>& b) {
  return (a.first - o.first) * (b.second - o.second) -
         (a.second - o.second) * (b.first - o.first);
}

}  // namespace

// ---------------------------------------------------------------------------

Digraph gen_line(int n) {
  require(n >= 1, ErrorCode::kInvalidArgument, "gen_line: n must be >= 1");
  EdgeList e;
  e.reserve(n - 1);
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Digraph(n, std::move(e));
}

Digraph gen_rooted_tree(int n, int arity, uint64_t seed) {
  require(n >= 1 && arity >= 1, ErrorCode::kInvalidArgument,
          "gen_rooted_tree: need n >= 1 and arity >= 1");
  Rng rng(seed);
  std::vector<int> children(n, 0);
  std::vector<Vertex> open = {0};
  EdgeList e;
  for (Vertex v = 1; v < n; ++v) {
    size_t slot = rng.Uniform(open.size());
    Vertex p = open[slot];
    e.push_back({p, v});
    if (++children[p] == arity) {
      open[slot] = open.back();
      open.pop_back();
    }
    open.push_back(v);
  }
  return Digraph::from_unsorted(n, std::move(e));
}

Digraph gen_random_dag(int n, double edge_prob, uint64_t seed) {
  require(n >= 1 && edge_prob >= 0 && edge_prob <= 1,
          ErrorCode::kInvalidArgument,
          "gen_random_dag: need n >= 1 and 0 <= edge_prob <= 1");
  Rng rng(seed);
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  rng.Shuffle(perm.begin(), perm.end());
  EdgeList e;
  if (edge_prob > 0) {
    double log_q = std::log1p(-std::min(edge_prob, 1.0));
    for (int i = 0; i < n; ++i) {
      int64_t j = i + 1;
      while (j < n) {
        if (edge_prob < 1) {
          // Geometric skip to the next success.
          double u = 1.0 - rng.UniformReal();
          j += static_cast<int64_t>(std::floor(std::log(u) / log_q));
          if (j >= n) break;
        }
        e.push_back({perm[i], perm[j]});
        ++j;
      }
    }
  }
  check_size(n, static_cast<int64_t>(e.size()));
  return Digraph::from_unsorted(n, std::move(e));
}

Digraph gen_planar(int n, uint64_t seed) {
  require(n >= 1, ErrorCode::kInvalidArgument, "gen_planar: n must be >= 1");
  Rng rng(seed);
  const uint64_t range = 1u << 30;
  std::set<std::pair<int64_t, int64_t>> seen;
  while (static_cast<int>(seen.size()) < n) {
    seen.insert({static_cast<int64_t>(rng.Uniform(range)),
                 static_cast<int64_t>(rng.Uniform(range))});
  }
  std::vector<std::pair<int64_t, int64_t>> pts(seen.begin(), seen.end());
  EdgeList undirected;
  std::vector<int> upper, lower;
  for (int p = 0; p < n; ++p) {
    if (!upper.empty()) {
      undirected.push_back({upper.back(), p});
      while (upper.size() >= 2 &&
             cross(pts[upper[upper.size() - 2]], pts[upper.back()], pts[p]) > 0) {
        upper.pop_back();
        undirected.push_back({upper.back(), p});
      }
      undirected.push_back({lower.back(), p});
      while (lower.size() >= 2 &&
             cross(pts[lower[lower.size() - 2]], pts[lower.back()], pts[p]) < 0) {
        lower.pop_back();
        undirected.push_back({lower.back(), p});
      }
    }
    upper.push_back(p);
    lower.push_back(p);
  }
  std::vector<int> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  rng.Shuffle(rank.begin(), rank.end());
  EdgeList e;
  e.reserve(undirected.size());
  for (const Edge& x : undirected) {
    if (rank[x.u] < rank[x.v]) {
      e.push_back({x.u, x.v});
    } else {
      e.push_back({x.v, x.u});
    }
  }
  return Digraph::from_unsorted(n, std::move(e));
}

// ---------------------------------------------------------------------------

std::vector<int> Butterfly::coords(Vertex v) const {
  std::vector<int> c(k);
  int idx = index(v);
  for (int j = k - 1; j >= 0; --j) {
    c[j] = idx % b;
    idx /= b;
  }
  return c;
}

Butterfly gen_butterfly(int b, int k) {
  require(b >= 2 && k >= 1, ErrorCode::kInvalidArgument,
          "gen_butterfly: need b >= 2 and k >= 1");
  int64_t cap = SizeCap(static_cast<int>(kMaxVertices));
  int64_t width = ipow(b, k, cap);
  if (width < 0 || width * (k + 1) > cap) {
    throw Error(ErrorCode::kTooLarge, "gen_butterfly: b^k exceeds the size cap");
  }
  check_size(width * (k + 1), width * b * k);
  Butterfly bf;
  bf.b = b;
  bf.k = k;
  bf.width = static_cast<int>(width);
  EdgeList e;
  e.reserve(static_cast<size_t>(width) * b * k);
  for (int i = 1; i <= k; ++i) {
    // Position i (1-based) has weight b^(k-i).
    int weight = static_cast<int>(ipow(b, k - i, width));
    for (int idx = 0; idx < width; ++idx) {
      int digit = (idx / weight) % b;
      int base = idx - digit * weight;
      for (int x = 0; x < b; ++x) {
        e.push_back({bf.vertex(i, idx), bf.vertex(i + 1, base + x * weight)});
      }
    }
  }
  bf.graph = Digraph::from_unsorted(static_cast<int>(width * (k + 1)), std::move(e));
  return bf;
}

Digraph gen_broom(int left, int d_star) {
  require(left >= 1 && d_star >= 1, ErrorCode::kInvalidArgument,
          "gen_broom: need left >= 1 and d_star >= 1");
  int64_t n = int64_t{left} + d_star + int64_t{d_star} * d_star;
  check_size(n, int64_t{left} * d_star + int64_t{d_star} * d_star);
  EdgeList e;
  for (int u = 0; u < left; ++u)
    for (int x = 0; x < d_star; ++x) e.push_back({u, left + x});
  for (int x = 0; x < d_star; ++x)
    for (int y = 0; y < d_star; ++y)
      e.push_back({left + x, left + d_star + x * d_star + y});
  return Digraph(static_cast<int>(n), std::move(e));
}

// ---------------------------------------------------------------------------

Ratio Ratio::Of(int64_t num, int64_t den) {
  if (den == 0) return Ratio{1, 0};
  int64_t g = std::gcd(num, den);
  return Ratio{num / g, den / g};
}

std::string Ratio::to_string() const {
  if (infinite()) return "inf";
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

void recompute_minrep_params(MinRepInstance& inst) {
  const int n = inst.n();
  std::vector<int> deg(2 * n, 0);
  for (const Edge& e : inst.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  inst.d = deg.empty() ? 0 : *std::max_element(deg.begin(), deg.end());
  Ratio best{1, 0};
  for (int c = 0; c < 2 * inst.r; ++c) {
    int active = 0;
    for (int t = 0; t < inst.cluster_size; ++t) {
      active += deg[c * inst.cluster_size + t] > 0;
    }
    if (active == 0) continue;
    Ratio here = Ratio::Of(inst.cluster_size, active);
    if (best.infinite() || here.num * best.den < best.num * here.den) best = here;
  }
  inst.m = best;
}

std::vector<std::pair<int, int>> supergraph(const MinRepInstance& inst) {
  std::set<std::pair<int, int>> s;
  for (const Edge& e : inst.edges) {
    s.insert({inst.left_cluster(e.u), inst.right_cluster(e.v)});
  }
  return {s.begin(), s.end()};
}

void check_minrep(const MinRepInstance& inst) {
  require(inst.r >= 1 && inst.cluster_size >= 1, ErrorCode::kInvalidInstance,
          "MIN-REP: r and cluster size must be positive");
  const int n = inst.n();
  for (const Edge& e : inst.edges) {
    require(e.u >= 0 && e.u < n && e.v >= n && e.v < 2 * n,
            ErrorCode::kInvalidInstance, "MIN-REP: edge must go left -> right");
  }
  require(std::is_sorted(inst.edges.begin(), inst.edges.end()) &&
              std::adjacent_find(inst.edges.begin(), inst.edges.end()) ==
                  inst.edges.end(),
          ErrorCode::kInvalidInstance, "MIN-REP: edges must be sorted and unique");
  if (inst.group_size > 0) {
    require(inst.cluster_size % inst.group_size == 0, ErrorCode::kInvalidInstance,
            "MIN-REP: groups must tile clusters");
  }
  MinRepInstance copy = inst;
  recompute_minrep_params(copy);
  require(copy.d == inst.d && copy.m == inst.m, ErrorCode::kInvalidInstance,
          "MIN-REP: stored d or m is stale");
}

bool is_rep_cover(const MinRepInstance& inst, const std::vector<Vertex>& s) {
  std::vector<char> in(2 * inst.n(), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= 2 * inst.n()) return false;
    in[v] = 1;
  }
  std::set<std::pair<int, int>> covered;
  for (const Edge& e : inst.edges) {
    if (in[e.u] && in[e.v]) {
      covered.insert({inst.left_cluster(e.u), inst.right_cluster(e.v)});
    }
  }
  return covered.size() == supergraph(inst).size();
}

MinRepInstance gen_minrep(int r, int cluster_size, int active,
                          double superedge_prob, double edge_prob,
                          uint64_t seed) {
  require(r >= 1 && cluster_size >= 1 && active >= 1 && active <= cluster_size,
          ErrorCode::kInvalidArgument,
          "gen_minrep: need r >= 1 and 1 <= active <= cluster_size");
  check_size(int64_t{2} * r * cluster_size, int64_t{r} * r * active * active);
  Rng rng(seed);
  MinRepInstance inst;
  inst.r = r;
  inst.cluster_size = cluster_size;
  // Active positions per cluster; left clusters first, then right.
  std::vector<std::vector<Vertex>> act(2 * r);
  for (int c = 0; c < 2 * r; ++c) {
    std::vector<int> pos(cluster_size);
    std::iota(pos.begin(), pos.end(), 0);
    rng.Shuffle(pos.begin(), pos.end());
    pos.resize(active);
    std::sort(pos.begin(), pos.end());
    for (int t : pos) act[c].push_back(c * cluster_size + t);
  }
  auto add_superedge = [&](int i, int j) {
    size_t before = inst.edges.size();
    for (Vertex u : act[i])
      for (Vertex v : act[r + j])
        if (rng.Bernoulli(edge_prob)) inst.edges.push_back({u, v});
    if (inst.edges.size() == before) {
      inst.edges.push_back({act[i][rng.Uniform(active)],
                            act[r + j][rng.Uniform(active)]});
    }
  };
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (rng.Bernoulli(superedge_prob)) add_superedge(i, j);
  if (inst.edges.empty()) add_superedge(0, 0);
  std::sort(inst.edges.begin(), inst.edges.end());
  recompute_minrep_params(inst);
  return inst;
}

MinRepInstance minrep_transform(Transform t, const MinRepInstance& inst,
                                int factor) {
  if (factor < 1) {
    throw Error(ErrorCode::kInvalidFactor, "transform factor must be >= 1");
  }
  if (t == Transform::kT5 && (factor & (factor - 1)) != 0) {
    throw Error(ErrorCode::kInvalidFactor, "T5 factor must be a power of two");
  }
  const int n = inst.n();
  const int cs = inst.cluster_size;
  const int64_t f = factor;
  int64_t new_vertices = 2 * int64_t{n} * f * (t == Transform::kT5 ? f : 1);
  int64_t new_edges = static_cast<int64_t>(inst.edges.size()) *
                      (t == Transform::kT4 ? f * f
                       : t == Transform::kT5 ? f * f
                       : t == Transform::kT2 ? 1
                                             : f);
  check_size(new_vertices, new_edges);

  MinRepInstance out;
  EdgeList e;
  switch (t) {
    case Transform::kT1: {
      out.r = inst.r * factor;
      out.cluster_size = cs;
      out.group_size = inst.group_size;
      const int n2 = out.n();
      for (int c = 0; c < factor; ++c) {
        for (const Edge& x : inst.edges) {
          Vertex u = c * n + x.u;
          Vertex v = n2 + c * n + (x.v - n);
          e.push_back({u, v});
        }
      }
      break;
    }
    case Transform::kT2: {
      out.r = inst.r;
      out.cluster_size = cs * factor;
      const int n2 = out.n();
      auto map = [&](Vertex v) { return (v / cs) * out.cluster_size + v % cs; };
      for (const Edge& x : inst.edges) {
        e.push_back({map(x.u), n2 + map(x.v - n)});
      }
      break;
    }
    case Transform::kT3:
    case Transform::kT4: {
      out.r = inst.r;
      out.cluster_size = cs * factor;
      if (t == Transform::kT4) out.group_size = cs;
      const int n2 = out.n();
      auto map = [&](Vertex v, int c) {
        return (v / cs) * out.cluster_size + c * cs + v % cs;
      };
      for (const Edge& x : inst.edges) {
        for (int c1 = 0; c1 < factor; ++c1) {
          if (t == Transform::kT3) {
            e.push_back({map(x.u, c1), n2 + map(x.v - n, c1)});
          } else {
            for (int c2 = 0; c2 < factor; ++c2) {
              e.push_back({map(x.u, c1), n2 + map(x.v - n, c2)});
            }
          }
        }
      }
      break;
    }
    case Transform::kT5: {
      MinRepInstance cur = inst;
      cur.group_size = 0;
      for (int rounds = factor; rounds > 1; rounds /= 2) {
        MinRepInstance nxt;
        nxt.r = 2 * cur.r;
        nxt.cluster_size = 2 * cur.cluster_size;
        const int cn = cur.n();
        const int c = cur.cluster_size;
        const int n2 = nxt.n();
        // Cluster i splits into i' = i and i'' = r + i, each holding two
        // copies of the original cluster.
        auto pos = [&](Vertex v, bool second_cluster, int copy) {
          int i = v / c;
          int cluster = second_cluster ? cur.r + i : i;
          return cluster * nxt.cluster_size + copy * c + v % c;
        };
        for (const Edge& x : cur.edges) {
          Vertex u = x.u;
          Vertex w = x.v - cn;
          nxt.edges.push_back({pos(u, false, 0), n2 + pos(w, false, 0)});
          nxt.edges.push_back({pos(u, false, 1), n2 + pos(w, true, 1)});
          nxt.edges.push_back({pos(u, true, 0), n2 + pos(w, true, 0)});
          nxt.edges.push_back({pos(u, true, 1), n2 + pos(w, false, 1)});
        }
        std::sort(nxt.edges.begin(), nxt.edges.end());
        cur = std::move(nxt);
      }
      out.r = cur.r;
      out.cluster_size = cur.cluster_size;
      e = std::move(cur.edges);
      break;
    }
  }
  std::sort(e.begin(), e.end());
  out.edges = std::move(e);
  recompute_minrep_params(out);
  return out;
}

// ---------------------------------------------------------------------------

HardInstanceParams hard_instance_params(int k, int64_t n_target) {
  require(k >= 3, ErrorCode::kInvalidArgument, "hard instance needs k >= 3");
  require(n_target >= 2, ErrorCode::kInvalidArgument, "hard instance needs n >= 2");
  HardInstanceParams p;
  p.k = k;
  p.n_target = n_target;
  const double n = static_cast<double>(n_target);
  p.delta = (k - 1.0) / (k - 0.25);
  p.eta = p.delta / (2.0 * (4 * k - 4) * (4 * k - 2));
  p.zeta = p.delta * ((4.0 * k - 5) / (4.0 * k - 4) + 1.0 / (4.0 * k - 2));
  p.r_ideal = std::pow(n, p.delta / 2);
  p.d_star_ideal = std::pow(std::pow(n, p.delta) / p.r_ideal, 1.0 / (k - 1));
  p.copies_ideal = std::pow(n, 1 - p.delta);
  p.m_ideal = std::pow(n, 2 * p.eta);

  if (!(p.zeta > p.delta * (2 * k - 3) / (2.0 * (k - 1)) &&
        p.zeta > 1 + p.eta - p.delta / (k - 1) && p.zeta > p.delta / 2)) {
    throw Error(ErrorCode::kParamsInfeasible, "size conditions on zeta fail");
  }
  p.r = static_cast<int>(std::max<int64_t>(1, ceil_clean(p.r_ideal)));
  p.d_star = static_cast<int>(std::max<int64_t>(
      1, ceil_clean(std::pow(std::pow(n, p.delta) / p.r, 1.0 / (k - 1)))));
  p.copies = static_cast<int>(std::max<int64_t>(1, ceil_clean(p.copies_ideal)));
  p.m_target = static_cast<int>(std::max<int64_t>(1, ceil_clean(p.m_ideal)));
  if (p.d_star < 2) {
    throw Error(ErrorCode::kParamsInfeasible,
                "rounded d* < 2; increase n_target");
  }
  int64_t gs = ipow(p.d_star, k - 1, kMaxVertices);
  if (gs < 0) throw Error(ErrorCode::kParamsInfeasible, "group size overflows");
  p.group_size = static_cast<int>(gs);
  if (p.m_target > p.group_size) {
    throw Error(ErrorCode::kParamsInfeasible, "m exceeds the group size");
  }
  const int64_t groups = int64_t{p.r} * p.copies;
  p.layer_sizes.assign(k + 3, 0);
  int64_t total = 0;
  for (int j = 0; j < k + 1; ++j) p.layer_sizes[j] = static_cast<int>(groups * gs);
  p.layer_sizes[k + 1] = static_cast<int>(groups * p.d_star);
  p.layer_sizes[k + 2] = static_cast<int>(groups * p.d_star * p.d_star);
  for (int s : p.layer_sizes) total += s;
  if (total > SizeCap(static_cast<int>(kMaxVertices))) {
    throw Error(ErrorCode::kParamsInfeasible, "instance exceeds the size cap");
  }
  return p;
}

HardInstance gen_hard_instance(int k, int64_t n_target, uint64_t seed) {
  HardInstance h;
  h.params = hard_instance_params(k, n_target);
  const HardInstanceParams& p = h.params;
  const int cs = p.group_size;
  const int ds = p.d_star;
  const int active = std::max(1, cs / p.m_target);
  h.base = gen_minrep(p.r, cs, active, 0.5, 0.5, DeriveSeed(seed, "hard-minrep"));
  h.specialized = minrep_transform(Transform::kT4, h.base, p.copies);
  const MinRepInstance& sp = h.specialized;
  const int ns = sp.n();
  const int groups = p.r * p.copies;

  h.layer_offset.assign(k + 4, 0);
  for (int j = 1; j <= k + 3; ++j) {
    h.layer_offset[j] = (j == 1 ? 0 : h.layer_offset[j - 1] + p.layer_sizes[j - 2]);
  }
  const int total = h.layer_offset[k + 3] + p.layer_sizes[k + 2];
  h.layer.assign(total, 0);
  h.group.assign(total, 0);
  for (int j = 1; j <= k + 3; ++j) {
    int per_group = p.layer_sizes[j - 1] / groups;
    for (int t = 0; t < p.layer_sizes[j - 1]; ++t) {
      h.layer[h.layer_offset[j] + t] = j;
      h.group[h.layer_offset[j] + t] = t / per_group;
    }
  }

  std::vector<int> deg(2 * ns, 0);
  for (const Edge& e : sp.edges) {
    ++deg[e.u];
    ++deg[e.v];
  }
  EdgeList edges;
  // Butterflies: k-1 coordinates, strips 1..k; strip j -> j+1 varies
  // coordinate j, whose weight is d*^(k-1-j).
  const int blocks = cs / ds;
  for (int g = 0; g < groups; ++g) {
    // Strip-k label -> group position: non-isolated positions are dealt
    // round-robin over the prefix blocks, isolated ones fill the rest.
    std::vector<int> label_pos(cs, -1);
    std::vector<int> nonisolated, isolated;
    for (int t = 0; t < cs; ++t) {
      (deg[g * cs + t] > 0 ? nonisolated : isolated).push_back(t);
    }
    for (size_t t = 0; t < nonisolated.size(); ++t) {
      int block = static_cast<int>(t % blocks);
      int slot = static_cast<int>(t / blocks);
      label_pos[block * ds + slot] = nonisolated[t];
    }
    size_t next_iso = 0;
    for (int idx = 0; idx < cs; ++idx) {
      if (label_pos[idx] < 0) label_pos[idx] = isolated[next_iso++];
    }
    auto vertex = [&](int strip, int idx) -> Vertex {
      int local = strip == k ? label_pos[idx] : idx;
      return h.layer_offset[strip] + g * cs + local;
    };
    for (int j = 1; j < k; ++j) {
      int weight = static_cast<int>(ipow(ds, k - 1 - j, cs));
      for (int idx = 0; idx < cs; ++idx) {
        int digit = (idx / weight) % ds;
        int base = idx - digit * weight;
        for (int x = 0; x < ds; ++x) {
          edges.push_back({vertex(j, idx), vertex(j + 1, base + x * weight)});
        }
      }
    }
  }
  // MIN-REP edges V_k -> V_{k+1}.
  h.minrep_vertex.assign(2 * ns, 0);
  for (int v = 0; v < ns; ++v) {
    h.minrep_vertex[v] = h.layer_offset[k] + v;
    h.minrep_vertex[ns + v] = h.layer_offset[k + 1] + v;
  }
  for (const Edge& e : sp.edges) {
    edges.push_back({h.minrep_vertex[e.u], h.minrep_vertex[e.v]});
  }
  // Brooms on the right groups.
  for (int g = 0; g < groups; ++g) {
    for (int t = 0; t < cs; ++t) {
      Vertex b = h.layer_offset[k + 1] + g * cs + t;
      for (int x = 0; x < ds; ++x) {
        edges.push_back({b, h.layer_offset[k + 2] + g * ds + x});
      }
    }
    for (int x = 0; x < ds; ++x) {
      Vertex mid = h.layer_offset[k + 2] + g * ds + x;
      for (int y = 0; y < ds; ++y) {
        edges.push_back({mid, h.layer_offset[k + 3] + (g * ds + x) * ds + y});
      }
    }
  }
  check_size(total, static_cast<int64_t>(edges.size()));
  h.graph = Digraph::from_unsorted(total, std::move(edges));
  return h;
}

RepCoverSpanner rep_cover_to_spanner(const HardInstance& inst,
                                     const std::vector<Vertex>& s) {
  if (!is_rep_cover(inst.base, s)) {
    throw Error(ErrorCode::kNotARepCover, "vertex set is not a rep-cover");
  }
  const HardInstanceParams& p = inst.params;
  const int k = p.k;
  const int cs = p.group_size;
  const MinRepInstance& base = inst.base;
  const int nb = base.n();
  const Digraph& g = inst.graph;

  std::vector<char> in_cover(2 * nb, 0);
  for (Vertex v : s) in_cover[v] = 1;
  std::vector<std::vector<Vertex>> nbrs(nb);
  for (const Edge& e : base.edges) nbrs[e.u].push_back(e.v);

  RepCoverSpanner out;
  // Completion: every strip-2 vertex of copy 0 (all copies share the layout).
  for (int i = 0; i < p.r; ++i) {
    int group = i * p.copies;
    for (int idx = 0; idx < cs; ++idx) {
      Vertex u = inst.layer_offset[2] + group * cs + idx;
      std::vector<Vertex> frontier = {u};
      for (int step = 2; step < k; ++step) {
        std::vector<Vertex> next;
        for (Vertex x : frontier)
          for (Vertex y : g.out(x)) next.push_back(y);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        frontier = std::move(next);
      }
      // frontier = strip-k vertices reachable from u.
      std::map<int, std::pair<bool, Vertex>> by_cluster;  // covered?, smallest
      for (Vertex a : frontier) {
        Vertex base_a = i * cs + (a - inst.layer_offset[k] - group * cs);
        for (Vertex b : nbrs[base_a]) {
          int j = base.right_cluster(b);
          auto [it, fresh] = by_cluster.try_emplace(j, false, b);
          if (!fresh) it->second.second = std::min(it->second.second, b);
          if (in_cover[b]) it->second.first = true;
        }
      }
      for (const auto& [j, st] : by_cluster) {
        if (!st.first) {
          in_cover[st.second] = 1;
          ++out.completions;
        }
      }
    }
  }

  SpannerResult& res = out.result;
  res.k = k;
  res.edges = g.edges();
  for (Vertex v = 0; v < 2 * nb; ++v) {
    if (!in_cover[v]) continue;
    out.cover_used.push_back(v);
    bool left = v < nb;
    int local = left ? v : v - nb;
    int cluster = local / cs;
    int pos = local % cs;
    for (int c = 0; c < p.copies; ++c) {
      int group = cluster * p.copies + c;
      if (left) {
        Vertex x = inst.layer_offset[k] + group * cs + pos;
        for (Vertex a : g.in(x))
          for (Vertex b : g.in(a)) res.edges.push_back({b, x});
      } else {
        Vertex x = inst.layer_offset[k + 1] + group * cs + pos;
        for (Vertex a : g.out(x))
          for (Vertex b : g.out(a)) res.edges.push_back({x, b});
      }
    }
  }
  res.stats.algorithm = "rep-cover";
  finalize_stats(g, res);
  return out;
}

// ---------------------------------------------------------------------------

std::string_view VariantName(SetCoverInstance::Variant v) {
  switch (v) {
    case SetCoverInstance::Variant::kPlain: return "plain";
    case SetCoverInstance::Variant::kBalanced: return "balanced";
    case SetCoverInstance::Variant::kBalancedBounded: return "balanced-bounded";
    case SetCoverInstance::Variant::kNice: return "nice";
  }
  return "?";
}

void check_set_cover(const SetCoverInstance& inst) {
  using V = SetCoverInstance::Variant;
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidShape, "set cover: " + what);
  };
  if (inst.a < 0 || inst.b < 0 || static_cast<int>(inst.sets.size()) != inst.a) {
    fail("set count mismatch");
  }
  for (const auto& s : inst.sets) {
    for (size_t i = 0; i < s.size(); ++i) {
      if (s[i] < 0 || s[i] >= inst.b) fail("element out of range");
      if (i > 0 && s[i] <= s[i - 1]) fail("set not sorted/unique");
    }
  }
  if (inst.variant != V::kPlain && inst.a != inst.b &&
      inst.variant != V::kNice) {
    fail("balanced variants need a == b");
  }
  if (inst.variant == V::kBalancedBounded) {
    for (const auto& s : inst.sets)
      if (static_cast<int>(s.size()) > inst.c) fail("degree above bound");
  }
  if (inst.variant == V::kNice) {
    if (inst.block_size < 1 || int64_t{inst.a} * inst.block_size != inst.b) {
      fail("b must equal a * block_size");
    }
    for (const auto& s : inst.sets) {
      std::set<int> blocks;
      for (int e : s) blocks.insert(e / inst.block_size);
      if (s.size() != blocks.size() * inst.block_size) fail("partial block");
      if (static_cast<int>(blocks.size()) > inst.c) fail("too many blocks");
    }
  }
}

bool is_set_cover(const SetCoverInstance& inst, const std::vector<int>& chosen) {
  std::vector<char> hit(inst.b, 0);
  for (int s : chosen) {
    if (s < 0 || s >= inst.a) return false;
    for (int e : inst.sets[s]) hit[e] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

SetCoverInstance gen_nice_set_cover(int a, int b, int c, uint64_t seed) {
  if (a < 1 || b < a || b % a != 0 || c < 1 || c > a) {
    throw Error(ErrorCode::kInvalidShape,
                "nice set cover needs a | b, 1 <= c <= a");
  }
  Rng rng(seed);
  SetCoverInstance inst;
  inst.variant = SetCoverInstance::Variant::kNice;
  inst.a = a;
  inst.b = b;
  inst.c = c;
  inst.block_size = b / a;
  std::vector<int> perm(a);
  std::iota(perm.begin(), perm.end(), 0);
  rng.Shuffle(perm.begin(), perm.end());
  std::vector<std::set<int>> blocks(a);
  for (int i = 0; i < a; ++i) blocks[perm[i]].insert(i);
  for (int s = 0; s < a; ++s) {
    int extra = static_cast<int>(rng.Uniform(c));
    for (int t = 0; t < extra; ++t) blocks[s].insert(static_cast<int>(rng.Uniform(a)));
  }
  inst.sets.resize(a);
  for (int s = 0; s < a; ++s) {
    for (int blk : blocks[s])
      for (int e = 0; e < inst.block_size; ++e)
        inst.sets[s].push_back(blk * inst.block_size + e);
  }
  check_set_cover(inst);
  return inst;
}

SetCoverInstance set_cover_reduce(const SetCoverInstance& inst,
                                  SetCoverInstance::Variant target, int param) {
  using V = SetCoverInstance::Variant;
  check_set_cover(inst);
  SetCoverInstance out;
  out.variant = target;
  if (inst.variant == V::kPlain && target == V::kBalanced) {
    out.sets = inst.sets;
    out.a = out.b = std::max(inst.a, inst.b);
    if (inst.a < inst.b) {
      out.sets.resize(inst.b);
    } else {
      for (auto& s : out.sets)
        for (int e = inst.b; e < inst.a; ++e) s.push_back(e);
    }
  } else if (inst.variant == V::kBalanced && target == V::kBalancedBounded) {
    out = inst;
    out.variant = target;
    out.c = param;
    for (const auto& s : inst.sets) {
      if (static_cast<int>(s.size()) > param) {
        throw Error(ErrorCode::kInvalidShape,
                    "degree-bounding requires every set to have <= c elements");
      }
    }
  } else if (inst.variant == V::kNice && target == V::kBalancedBounded) {
    out.a = out.b = inst.a;
    out.c = inst.c;
    out.sets.resize(inst.a);
    for (int s = 0; s < inst.a; ++s) {
      for (int e : inst.sets[s]) {
        int blk = e / inst.block_size;
        if (out.sets[s].empty() || out.sets[s].back() != blk) out.sets[s].push_back(blk);
      }
    }
  } else if (inst.variant == V::kBalancedBounded && target == V::kNice) {
    if (param < 1) throw Error(ErrorCode::kInvalidShape, "block factor must be >= 1");
    out.a = inst.a;
    out.b = inst.b * param;
    out.c = inst.c;
    out.block_size = param;
    out.sets.resize(inst.a);
    for (int s = 0; s < inst.a; ++s)
      for (int e : inst.sets[s])
        for (int t = 0; t < param; ++t) out.sets[s].push_back(e * param + t);
  } else {
    throw Error(ErrorCode::kInvalidShape,
                "unsupported reduction " + std::string(VariantName(inst.variant)) +
                    " -> " + std::string(VariantName(target)));
  }
  check_set_cover(out);
  return out;
}

// ---------------------------------------------------------------------------

TwoTcHardInstance gen_2tc_hard_instance(int n, int k, uint64_t seed) {
  require(k >= 2, ErrorCode::kInvalidArgument, "2tc-hard instance needs k >= 2");
  int b = static_cast<int>(std::llround(std::pow(n, 1.0 / k)));
  if (b < 2 || ipow(b, k, int64_t{1} << 40) != n) {
    throw Error(ErrorCode::kParamsInfeasible,
                "n must be b^k for an integer b >= 2");
  }
  TwoTcHardInstance h;
  h.n = n;
  h.b = b;
  h.k = k;
  h.alpha = 1 + 3.0 / (2 * k);
  h.beta = 1.0 / (5 * k);
  int block = static_cast<int>(ceil_clean(std::pow(n, h.alpha) / n));
  int c = static_cast<int>(std::min<int64_t>(n, std::max<int64_t>(
                                                    1, ceil_clean(std::pow(n, h.beta)))));
  check_size(int64_t{n} * (k + 1) + int64_t{n} * block,
             int64_t{n} * b * k + int64_t{n} * block * c);
  h.cover = gen_nice_set_cover(n, n * block, c, seed);
  Butterfly bf = gen_butterfly(b, k);
  EdgeList e = bf.graph.edges();
  const int elem0 = (k + 1) * n;
  for (int s = 0; s < n; ++s) {
    for (int x : h.cover.sets[s]) e.push_back({bf.vertex(k + 1, s), elem0 + x});
  }
  h.graph = Digraph::from_unsorted(elem0 + h.cover.b, std::move(e));
  h.layer.assign(h.graph.n(), k + 2);
  for (Vertex v = 0; v < elem0; ++v) h.layer[v] = bf.strip(v);
  h.ancestors_per_set = int64_t{b} * b;
  return h;
}

NodeCoverInstance gen_3nodecover_instance(
    const std::vector<std::vector<int>>& sets, const std::vector<int>& universe,
    int k) {
  auto bad = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidInstance, "3-node-cover: " + what);
  };
  if (k < 2) bad("k must be >= 2");
  std::map<int, int> index;
  for (int x : universe) {
    if (!index.emplace(x, static_cast<int>(index.size())).second) {
      bad("duplicate universe element");
    }
  }
  std::vector<int> occurrences(universe.size(), 0);
  for (const auto& d : sets) {
    if (d.size() > 3) bad("set with more than 3 elements");
    std::set<int> distinct(d.begin(), d.end());
    if (distinct.size() != d.size()) bad("repeated element in a set");
    for (int x : d) {
      auto it = index.find(x);
      if (it == index.end()) bad("element outside the universe");
      if (++occurrences[it->second] > 2) bad("element in more than 2 sets");
    }
  }
  for (int c : occurrences)
    if (c == 0) bad("universe element in no set");

  NodeCoverInstance out;
  out.num_sets = static_cast<int>(sets.size());
  out.num_elements = static_cast<int>(universe.size());
  out.k = k;
  const int n = out.num_sets;
  const int elem0 = 1 + n;
  const int path0 = elem0 + out.num_elements;
  EdgeList e;
  for (int i = 0; i < n; ++i) {
    Vertex v = 1 + i;
    e.push_back({0, v});
    for (int x : sets[i]) e.push_back({v, elem0 + index[x]});
    out.sum_set_sizes += static_cast<int64_t>(sets[i].size());
    Vertex prev = 0;
    for (int j = 0; j < k - 1; ++j) {
      Vertex p = path0 + i * (k - 1) + j;
      e.push_back({prev, p});
      prev = p;
    }
    e.push_back({prev, v});
  }
  out.graph = Digraph::from_unsorted(path0 + n * (k - 1), std::move(e));
  return out;
}

}  // namespace tcspan
