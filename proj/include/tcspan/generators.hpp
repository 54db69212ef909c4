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

#ifndef TCSPAN_GENERATORS_HPP_
#define TCSPAN_GENERATORS_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tcspan/graph.hpp"

namespace tcspan {

// ---------------------------------------------------------------------------
// Simple families.

// Directed path 0 -> 1 -> ... -> n-1.
Digraph gen_line(int n);
// Random recursive out-tree rooted at 0; every vertex has at most `arity`
// children and a parent with a smaller id.
Digraph gen_rooted_tree(int n, int arity, uint64_t seed);
// Each pair is an edge with probability edge_prob, oriented along a random
// permutation of the vertices.
Digraph gen_random_dag(int n, double edge_prob, uint64_t seed);
// Sweep triangulation of n random integer points, oriented by a random
// topological order. Vertex ids follow the (x, y) order of the points.
Digraph gen_planar(int n, uint64_t seed);

// ---------------------------------------------------------------------------
// Generalized butterfly: vertices (u_1..u_k, i) in [b]^k x [k+1]. Vertex id is
// (i-1) * b^k + index(u) with u_1 the most significant base-b digit. The edge
// (u, i) -> (v, i+1) exists iff u and v agree off position i.
struct Butterfly {
  int b = 0;
  int k = 0;
  int width = 0;  // b^k
  Digraph graph;

  int strip(Vertex v) const { return v / width + 1; }
  int index(Vertex v) const { return v % width; }
  Vertex vertex(int strip, int index) const {
    return (strip - 1) * width + index;
  }
  std::vector<int> coords(Vertex v) const;
};
// Throws kTooLarge when (k+1) b^k exceeds the size cap.
Butterfly gen_butterfly(int b, int k);

// Broom: left layer [0, left), middle layer [left, left + d), broomsticks
// after that, the sticks of middle x being contiguous.
Digraph gen_broom(int left, int d_star);

// ---------------------------------------------------------------------------
// MIN-REP.

// Exact positive rational; den == 0 encodes +infinity.
struct Ratio {
  int64_t num = 1;
  int64_t den = 0;
  static Ratio Of(int64_t num, int64_t den);
  bool infinite() const { return den == 0; }
  bool operator==(const Ratio&) const = default;
  std::string to_string() const;
};

// Bipartite clustered instance. Left vertices are [0, n) with cluster i at
// [i * cluster_size, (i+1) * cluster_size); right vertices are [n, 2n) laid
// out the same way. Edges go left -> right.
struct MinRepInstance {
  int r = 0;
  int cluster_size = 0;
  EdgeList edges;  // sorted
  int d = 0;       // maximum degree
  Ratio m;         // min over clusters of size / non-isolated count
  // Specialized instances: each cluster is a union of groups of this size
  // (0 when there are no groups).
  int group_size = 0;

  int n() const { return r * cluster_size; }
  int left_cluster(Vertex v) const { return v / cluster_size; }
  int right_cluster(Vertex v) const { return (v - n()) / cluster_size; }
  Digraph graph() const { return Digraph(2 * n(), edges); }
};

// Recomputes d and m from the edges.
void recompute_minrep_params(MinRepInstance& inst);
// Sorted superedges (i, j) with an edge between left cluster i and right
// cluster j.
std::vector<std::pair<int, int>> supergraph(const MinRepInstance& inst);
// Throws kInvalidInstance on shape errors or stale d, m.
void check_minrep(const MinRepInstance& inst);
bool is_rep_cover(const MinRepInstance& inst, const std::vector<Vertex>& s);

// Random base instance: each cluster gets `active` random positions that may
// carry edges; each cluster pair becomes a superedge with probability
// superedge_prob and then receives every active-active edge independently with
// probability edge_prob (at least one).
MinRepInstance gen_minrep(int r, int cluster_size, int active,
                          double superedge_prob, double edge_prob,
                          uint64_t seed);

enum class Transform { kT1, kT2, kT3, kT4, kT5 };
// T1 disjoint copies, T2 dummy vertices inside clusters, T3 blowup with
// matching supergraph, T4 blowup with complete supergraph (sets group_size),
// T5 tensoring (factor a power of two). Throws kInvalidFactor.
MinRepInstance minrep_transform(Transform t, const MinRepInstance& inst,
                                int factor);

// ---------------------------------------------------------------------------
// Layered hard instance built from a specialized MIN-REP instance.

struct HardInstanceParams {
  int k = 0;
  int64_t n_target = 0;
  double delta = 0, eta = 0, zeta = 0;
  // Ideal real values.
  double r_ideal = 0, d_star_ideal = 0, copies_ideal = 0, m_ideal = 0;
  // Rounded values.
  int r = 0;
  int d_star = 0;
  int copies = 0;        // groups per cluster
  int group_size = 0;    // d_star^(k-1)
  int m_target = 0;
  std::vector<int> layer_sizes;  // V_1 .. V_{k+3}
};

HardInstanceParams hard_instance_params(int k, int64_t n_target);

struct HardInstance {
  HardInstanceParams params;
  MinRepInstance base;         // before blowup
  MinRepInstance specialized;  // T4(base, copies)
  Digraph graph;
  std::vector<int> layer;      // 1 .. k+3 per vertex
  std::vector<int> layer_offset;  // first vertex id of V_j, index j (1-based)
  // Graph vertex of specialized left/right vertex v (right ids are offset by
  // n as in MinRepInstance).
  std::vector<Vertex> minrep_vertex;
  // Group index (i * copies + s) for every vertex in V_1..V_{k+3}.
  std::vector<int> group;
};

// Throws kParamsInfeasible when the rounded parameters cannot realize the
// construction.
HardInstance gen_hard_instance(int k, int64_t n_target, uint64_t seed);

// S is a rep-cover of inst.base. Adds, for every replica of a left s, edges
// from the d*^2 vertices two strips before it, and for every replica of a
// right s, edges to its d*^2 broomsticks.
//
// A strip-2 vertex reaches only one block of its group, so its pairs with
// broomsticks (graph distance k+1) need a cover vertex on the right adjacent
// to that block. Missing ones are added to the right side of the cover
// (smallest id first) before the shortcuts are emitted, which keeps every
// shortcut of type 2&(k+1). Throws kNotARepCover.
struct RepCoverSpanner {
  SpannerResult result;
  std::vector<Vertex> cover_used;  // S plus completions, sorted
  int64_t completions = 0;
};
RepCoverSpanner rep_cover_to_spanner(const HardInstance& inst,
                                     const std::vector<Vertex>& s);

// ---------------------------------------------------------------------------
// Set cover variants. Sets are A = [0, a), elements B = [0, b).

struct SetCoverInstance {
  enum class Variant { kPlain, kBalanced, kBalancedBounded, kNice };
  Variant variant = Variant::kPlain;
  int a = 0;
  int b = 0;
  int c = 0;           // degree bound (balanced-bounded, nice)
  int block_size = 0;  // nice: block i is [i * block_size, (i+1) * block_size)
  std::vector<std::vector<int>> sets;  // sorted element lists
};

std::string_view VariantName(SetCoverInstance::Variant v);
// Throws kInvalidShape when an invariant of the tagged variant fails.
void check_set_cover(const SetCoverInstance& inst);
bool is_set_cover(const SetCoverInstance& inst, const std::vector<int>& chosen);

// Every block is covered; each set contains between one and c whole blocks.
SetCoverInstance gen_nice_set_cover(int a, int b, int c, uint64_t seed);

// Supported reductions:
//   plain -> balanced (padding), balanced -> balanced-bounded (degree check
//   with bound c), nice -> balanced-bounded (block compression),
//   balanced-bounded -> nice (block expansion by `factor`).
// Throws kInvalidShape otherwise.
SetCoverInstance set_cover_reduce(const SetCoverInstance& inst,
                                  SetCoverInstance::Variant target,
                                  int param = 0);

// ---------------------------------------------------------------------------
// Butterfly-based 2-TC instance: levels V_1..V_{k+1} form BF(k, n) with
// n = b^k; V_{k+1} are the sets of a nice set cover instance and V_{k+2} its
// elements.
struct TwoTcHardInstance {
  int n = 0;
  int b = 0;
  int k = 0;
  double alpha = 0, beta = 0;
  SetCoverInstance cover;
  Digraph graph;
  std::vector<int> layer;  // 1 .. k+2
  // Vertices of V_1 that reach each vertex of V_{k+1}.
  int64_t ancestors_per_set = 0;
};

// Throws kParamsInfeasible unless n is a perfect k-th power b^k with b >= 2.
TwoTcHardInstance gen_2tc_hard_instance(int n, int k, uint64_t seed);

// Node-cover reduction graph. Vertex 0 is the apex, then one vertex per set,
// one per universe element (in the given order), then the k-1 path vertices
// of each set. Throws kInvalidInstance.
struct NodeCoverInstance {
  Digraph graph;
  int num_sets = 0;
  int num_elements = 0;
  int k = 0;
  int64_t sum_set_sizes = 0;
};
NodeCoverInstance gen_3nodecover_instance(
    const std::vector<std::vector<int>>& sets, const std::vector<int>& universe,
    int k);

}  // namespace tcspan

#endif  // TCSPAN_GENERATORS_HPP_
