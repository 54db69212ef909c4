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

#ifndef TCSPAN_GRAPH_HPP_
#define TCSPAN_GRAPH_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tcspan {

using Vertex = int32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

using EdgeList = std::vector<Edge>;

// Sorts and removes duplicates.
void normalize_edges(EdgeList& edges);

// Fixed-size bit set sized at runtime.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int size) : size_(size), words_((size + 63) / 64, 0) {}

  int size() const { return size_; }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  void clear();
  int count() const;
  bool any() const;
  // Smallest set index >= from, or -1.
  int find_next(int from) const;
  Bitset& operator|=(const Bitset& o);
  Bitset& operator&=(const Bitset& o);
  // this &= ~o
  Bitset& subtract(const Bitset& o);
  bool operator==(const Bitset& o) const = default;
  std::span<uint64_t> words() { return words_; }
  std::span<const uint64_t> words() const { return words_; }

 private:
  int size_ = 0;
  std::vector<uint64_t> words_;
};

// Row (u) holds every v with a nonempty directed path u -> v. A vertex on a
// cycle reaches itself.
class ReachMatrix {
 public:
  ReachMatrix() = default;
  explicit ReachMatrix(int n);

  int n() const { return n_; }
  bool reaches(Vertex u, Vertex v) const {
    return (bits_[static_cast<size_t>(u) * stride_ + (v >> 6)] >> (v & 63)) & 1;
  }
  void set(Vertex u, Vertex v) {
    bits_[static_cast<size_t>(u) * stride_ + (v >> 6)] |= uint64_t{1} << (v & 63);
  }
  std::span<const uint64_t> row(Vertex u) const {
    return {bits_.data() + static_cast<size_t>(u) * stride_, stride_};
  }
  std::span<uint64_t> mutable_row(Vertex u) {
    return {bits_.data() + static_cast<size_t>(u) * stride_, stride_};
  }
  // Number of v != u reachable from u.
  int64_t count_row(Vertex u) const;
  int64_t count_comparable_pairs() const;

 private:
  int n_ = 0;
  size_t stride_ = 0;
  std::vector<uint64_t> bits_;
};

// Immutable directed graph on vertices 0..n-1 without self-loops or parallel
// edges. Copies share adjacency and the lazily built reachability cache.
class Digraph {
 public:
  Digraph();
  // Throws kInvalidArgument on self-loops, duplicates or bad endpoints.
  Digraph(int n, EdgeList edges);
  // Sorts, drops duplicates and self-loops, then constructs.
  static Digraph from_unsorted(int n, EdgeList edges);

  int n() const;
  int64_t m() const;
  const EdgeList& edges() const;  // sorted lexicographically
  std::span<const Vertex> out(Vertex v) const;
  std::span<const Vertex> in(Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const;
  bool is_dag() const;
  // Throws kNotADag for cyclic graphs.
  const std::vector<Vertex>& topological_order() const;
  // Cached on first use; thread-safe.
  const ReachMatrix& reach() const;

 private:
  struct Data;
  std::shared_ptr<Data> d_;
};

// Matrix with entries v != u; the diagonal records self-reachability on cycles.
const ReachMatrix& transitive_closure(const Digraph& g);
// The graph with an edge for every comparable pair u != v.
Digraph tc_graph(const Digraph& g);
EdgeList comparable_pairs(const Digraph& g);

// Throws kNotADag.
Digraph transitive_reduction(const Digraph& g);

struct Condensation {
  Digraph dag;
  std::vector<int> component;                 // vertex -> component id
  std::vector<std::vector<Vertex>> members;   // ascending within component
};
// Components are numbered by their smallest member, so a DAG maps to itself.
Condensation condense_scc(const Digraph& g);

inline constexpr int kUnreachable = -1;

// Unweighted distances from s, kUnreachable beyond max_depth. With reverse,
// distances are measured toward s along incoming edges.
std::vector<int> bfs_distances(const Digraph& g, Vertex s,
                               int max_depth = 1 << 30, bool reverse = false);
// Row-major n*n matrix; d(u,u) = 0.
std::vector<int> all_pairs_distances(const Digraph& g);
// Largest distance over comparable pairs u != v (0 if none).
int comparable_diameter(const Digraph& g);

struct Violation {
  enum class Kind { kForeignEdge, kMissingPair };
  Kind kind = Kind::kMissingPair;
  Vertex u = 0;
  Vertex v = 0;
  std::string to_string() const;
};

struct VerifyReport {
  bool valid = true;
  std::optional<Violation> violation;
};

// H must be a subset of TC(G) and every comparable pair u != v must be joined
// by a path of length <= k in H. Reports the lexicographically smallest
// offending pair.
VerifyReport verify_spanner(const Digraph& g, const EdgeList& h, int k);
// Only checks that every listed pair has a path of length <= k in H.
VerifyReport verify_pairs(int n, const EdgeList& h, const EdgeList& pairs,
                          int k);

struct SpannerStats {
  int64_t size = 0;
  int64_t shortcut_count = 0;  // edges of H outside E(G)
  double runtime_ms = 0;
  uint64_t seed = 0;
  std::string algorithm;
};

struct SpannerResult {
  int k = 0;
  EdgeList edges;
  SpannerStats stats;
};

// Fills size and shortcut_count from the edges.
void finalize_stats(const Digraph& g, SpannerResult& r);

}  // namespace tcspan

#endif  // TCSPAN_GRAPH_HPP_
