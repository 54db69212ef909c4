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

#ifndef TCSPAN_CONSTRUCTIONS_HPP_
#define TCSPAN_CONSTRUCTIONS_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tcspan/common.hpp"
#include "tcspan/graph.hpp"

namespace tcspan {

// ---------------------------------------------------------------------------
// Ackermann hierarchy: A(1, j) = 2^j, A(i+1, 0) = A(i, 1),
// A(i+1, j+1) = A(i, 2^(2^A(i+1, j))).

// Exact value; throws kOverflow when it has more than 2^20 bits, and
// kInvalidArgument for i < 1 or j < 0.
boost::multiprecision::cpp_int ackermann(int i, int64_t j);
// min{j >= 0 : A(i, j) >= n}.
int lambda_k(int i, uint64_t n);
// min{i >= 1 : A(i, 1) >= n}.
int alpha(uint64_t n);

// ---------------------------------------------------------------------------
// Ladders on a directed path.

// Hub spacing for a segment of length len under stretch k: k = 3 uses
// ceil(sqrt(len)), k = 4 uses ceil(log2(len)), k >= 5 the smallest c >= 2
// with |line_spanner(ceil(len / c), k - 2)| <= 2 len. k = 2 places a single
// midpoint hub per segment instead.
struct LadderConfig {
  int k = 2;
  int cut(int len) const;
};

// Nested segment hierarchy on positions [0, m). Each segment picks hubs
// (the midpoint for k = 2, every cut(len)-th position plus the last one for
// k >= 3); the gaps between hubs are the child segments. Hubs of one segment
// are joined by a (k-2)-TC-spanner of their order (nothing when the path
// itself already joins them within k-2 steps), so with the path edges
// present two positions linked to hubs of a common segment are within k hops.
class PathLadder {
 public:
  PathLadder(int m, int k);

  int m() const { return m_; }
  int k() const { return k_; }
  // First hub >= y in each segment on the chain of segments containing y,
  // outermost first. Ends at the segment where y itself is a hub.
  std::vector<int> forward_hubs(int y) const;
  // Last hub <= y along the same chain.
  std::vector<int> backward_hubs(int y) const;
  // Position pairs (a, b), a < b, of the hub spanners.
  const std::vector<std::pair<int, int>>& inner_edges() const {
    return inner_;
  }
  int depth() const { return depth_; }

 private:
  struct Segment {
    int begin = 0;
    int end = 0;
    std::vector<int> hubs;      // ascending
    std::vector<int> children;  // gap i is (hubs[i-1], hubs[i]), then the tail
  };
  int build(int begin, int end, int level);
  int child_containing(const Segment& s, int y) const;

  int m_;
  int k_;
  int depth_ = 0;
  std::vector<Segment> segments_;
  std::vector<std::pair<int, int>> inner_;
};

// k-TC-spanner of the line 0 -> 1 -> ... -> n-1. k = 2 is the midpoint
// recursion; k >= 3 the hub ladder; k >= n - 1 returns the line itself.
// Throws kInvalidArgument for n < 1 or k < 2.
SpannerResult line_spanner(int n, int k);

// k-TC-spanner of an out-tree. Paths go through line_spanner; otherwise
// k = 2 uses centroid recursion (ancestors of the centroid link to it, it
// links to its descendants), and k >= 3 takes the smaller of that and a
// heavy-path scheme (line_spanner with stretch k-1 on every heavy path, plus
// an edge from each heavy path to every descendant hanging off it).
// Throws kNotATree, kInvalidArgument.
SpannerResult tree_spanner(const Digraph& t, int k);

// ---------------------------------------------------------------------------
// Path-separable pipeline.

struct LevelDecomposition {
  Vertex root = 0;
  std::vector<int> level;                  // per vertex
  std::vector<std::vector<Vertex>> levels;  // L_0 .. L_t, ascending ids
  int t() const { return static_cast<int>(levels.size()) - 1; }
  // Vertices of G_i = L_{i-1} u L_i for 1 <= i <= t; for t = 0 the single
  // group L_0.
  std::vector<Vertex> group(int i) const;
  int num_groups() const { return t() == 0 ? 1 : t(); }
};

// Levels by alternating forward and backward reachability from root (the
// smallest vertex by default). Throws kDisconnected if the underlying
// undirected graph is disconnected, kNotADag.
LevelDecomposition level_decompose(const Digraph& g, Vertex root = 0);

struct RootedTree {
  Vertex root = 0;
  std::vector<Vertex> parent;  // -1 at the root
  // Orientation of the edge to the parent in the digraph: true for
  // parent -> v.
  std::vector<bool> down;
  std::vector<int> depth;
};

// Spanning tree of the underlying graph whose root paths restricted to any
// level are single dipaths.
RootedTree build_spanning_tree(const Digraph& g, const LevelDecomposition& d);
// BFS tree of the underlying undirected graph. Throws kDisconnected.
RootedTree bfs_spanning_tree(const Digraph& g, Vertex root = 0);

// Tree path from v up to its ancestor a (inclusive), v first.
std::vector<Vertex> tree_path_up(const RootedTree& t, Vertex v, Vertex a);
// Splits a vertex sequence along tree edges into maximal dipaths, each listed
// in edge direction.
std::vector<std::vector<Vertex>> split_dipaths(const Digraph& g,
                                               const std::vector<Vertex>& path);

enum class SeparatorProvider { kTree, kPlanar };
std::string_view ProviderName(SeparatorProvider p);
SeparatorProvider ParseProvider(std::string_view s);

struct SeparatorRound {
  int component_size = 0;            // vertices of the graph separated
  std::vector<std::vector<Vertex>> paths;  // monotone paths, each child first
  int largest_after = 0;
};

struct MonotonePathSet {
  RootedTree tree;  // tree of the first round
  std::vector<std::vector<Vertex>> paths;
  std::vector<SeparatorRound> rounds;
  int s() const { return static_cast<int>(paths.size()); }
  // Sizes of the components left after removing every path, descending.
  std::vector<int> component_sizes;
};

// One separation round on the underlying undirected graph of g with spanning
// tree t: the tree provider takes the centroid of t, the planar provider the
// best of the centroid and the fundamental cycles of non-tree edges (two tree
// paths to the LCA), minimizing the largest remaining component.
SeparatorRound separator_round(const Digraph& g, const RootedTree& t,
                               SeparatorProvider provider);

// Repeats rounds on the largest remaining component (with a BFS tree rooted
// at its smallest vertex) until every component has at most n/2 vertices.
// Throws kNotPlanar for the planar provider on a non-planar graph, kNotATree
// for the tree provider on a non-tree.
MonotonePathSet path_separator(const Digraph& g, const RootedTree& t,
                               SeparatorProvider provider);

// Edges from v to the ladder hubs of P it reaches first and to v from the
// hubs reaching it last, at every segment of the chain. P must be a dipath
// of g; reachability is taken in g.
EdgeList hub_connect(const Digraph& g, Vertex v, const std::vector<Vertex>& p,
                     int k = 2);
// Hub spanners of the ladder on P, mapped to vertices of P.
EdgeList connect_on(const std::vector<Vertex>& p, int k);

struct PathsepStep {
  int component_size = 0;
  int largest_after = 0;  // largest component once the separator is removed
  int rounds = 0;
  int paths = 0;
  int dipaths = 0;
};

struct PathsepReport {
  SpannerResult result;
  std::vector<PathsepStep> steps;  // one per outer recursion call with n > 1
  int max_rounds = 0;
};

// k-TC-spanner of a DAG through recursive path separation of its transitive
// reduction. Throws kNotADag, kNotPlanar, kNotATree, kInvalidArgument.
PathsepReport pathsep_spanner(const Digraph& g, int k,
                              SeparatorProvider provider);

// ---------------------------------------------------------------------------
// Partial products on a tree.

// Spanner of the out-tree T' obtained from an undirected tree on n vertices
// by hanging a fresh leaf below every leaf (root 0). Vertices >= n are the
// fresh leaves. Shared by every PartialProductIndex.
struct ProductSkeleton {
  int n = 0;
  int k = 2;
  Digraph tree;  // T'
  std::vector<Vertex> parent;
  std::vector<int> depth, tin, tout;
  std::vector<Vertex> extra_child;  // fresh leaf of a leaf of T, else -1
  EdgeList spanner;                 // sorted

  bool is_ancestor(Vertex a, Vertex b) const {
    return tin[a] <= tin[b] && tout[b] <= tout[a];
  }
  // Spanner hops from a down to its descendant b (at most k of them).
  std::vector<Vertex> hops(Vertex a, Vertex b) const;
  // A child of v in T', preferring the fresh leaf.
  Vertex any_child(Vertex v) const;
  // Child of a on the path to its descendant b.
  Vertex child_toward(Vertex a, Vertex b) const;
  Vertex lca(Vertex a, Vertex b) const;

 private:
  friend ProductSkeleton build_product_skeleton(int, const EdgeList&, int);
  std::vector<std::vector<Vertex>> out_;  // spanner adjacency
};

// Throws kNotATree, kInvalidArgument.
ProductSkeleton build_product_skeleton(int n, const EdgeList& tree_edges,
                                       int k);

// Semigroup products along tree paths with at most 2k stored lookups per
// query. Every spanner edge (a, b) stores the product over the tree path from
// a to the parent of b in both directions.
template <class T>
class PartialProductIndex {
 public:
  using Op = std::function<T(const T&, const T&)>;

  PartialProductIndex(int n, const EdgeList& tree_edges, std::vector<T> values,
                      Op op, int k)
      : sk_(build_product_skeleton(n, tree_edges, k)),
        values_(std::move(values)),
        op_(std::move(op)) {
    if (static_cast<int>(values_.size()) != n) {
      throw Error(ErrorCode::kInvalidArgument, "one value per vertex required");
    }
    down_.reserve(sk_.spanner.size());
    up_.reserve(sk_.spanner.size());
    for (const Edge& e : sk_.spanner) {
      Vertex x = sk_.parent[e.v];
      T d = values_[x];
      T u = values_[x];
      while (x != e.u) {
        x = sk_.parent[x];
        d = op_(values_[x], d);
        u = op_(u, values_[x]);
      }
      down_.push_back(std::move(d));
      up_.push_back(std::move(u));
    }
  }

  int size() const { return static_cast<int>(down_.size()); }
  const ProductSkeleton& skeleton() const { return sk_; }
  // Lookups used by the last query.
  int last_lookups() const { return last_lookups_; }
  int64_t total_lookups() const { return total_lookups_; }

  // s_i o ... o s_j along the tree path from i to j.
  T query(Vertex i, Vertex j) {
    if (i < 0 || j < 0 || i >= sk_.n || j >= sk_.n) {
      throw Error(ErrorCode::kInvalidArgument, "query vertex out of range");
    }
    last_lookups_ = 0;
    T r = product(i, j);
    total_lookups_ += last_lookups_;
    return r;
  }

 private:
  T product(Vertex i, Vertex j) {
    if (sk_.is_ancestor(i, j)) return fold(i, sk_.any_child(j), false);
    if (sk_.is_ancestor(j, i)) return fold(j, sk_.any_child(i), true);
    Vertex w = sk_.lca(i, j);
    T left = fold(w, sk_.any_child(i), true);
    return op_(left, fold(sk_.child_toward(w, j), sk_.any_child(j), false));
  }
  const T& lookup(Vertex a, Vertex b, bool up) {
    auto it = std::lower_bound(sk_.spanner.begin(), sk_.spanner.end(),
                               Edge{a, b});
    ++last_lookups_;
    size_t idx = static_cast<size_t>(it - sk_.spanner.begin());
    return up ? up_[idx] : down_[idx];
  }
  // Product over the tree path from a down to the parent of b; reversed when
  // up is set.
  T fold(Vertex a, Vertex b, bool up) {
    std::vector<Vertex> h = sk_.hops(a, b);
    T r = lookup(h[0], h[1], up);
    for (size_t i = 1; i + 1 < h.size(); ++i) {
      const T& x = lookup(h[i], h[i + 1], up);
      r = up ? op_(x, r) : op_(r, x);
    }
    return r;
  }

  ProductSkeleton sk_;
  std::vector<T> values_;
  Op op_;
  std::vector<T> down_, up_;
  int last_lookups_ = 0;
  int64_t total_lookups_ = 0;
};

}  // namespace tcspan

#endif  // TCSPAN_CONSTRUCTIONS_HPP_
