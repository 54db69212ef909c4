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

#ifndef TCSPAN_MONO_HPP_
#define TCSPAN_MONO_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "tcspan/common.hpp"
#include "tcspan/graph.hpp"

namespace tcspan {

// Integer-valued function on the vertices with a query counter.
class FunctionOracle {
 public:
  explicit FunctionOracle(std::vector<int64_t> values)
      : values_(std::move(values)) {}

  int n() const { return static_cast<int>(values_.size()); }
  int64_t operator()(Vertex x) {
    ++queries_;
    return values_.at(x);
  }
  int64_t queries() const { return queries_; }
  void reset_queries() { queries_ = 0; }
  // Uncounted access for exhaustive checks.
  const std::vector<int64_t>& values() const { return values_; }

 private:
  std::vector<int64_t> values_;
  int64_t queries_ = 0;
};

struct TesterReport {
  bool accept = true;
  int64_t samples = 0;
  int64_t queries = 0;
  EdgeList sampled;              // in sampling order
  std::optional<Edge> violated;  // first violated sampled edge
};

// Edge tester over a 2-TC-spanner: samples ceil(4|H2| / (eps n)) spanner
// edges uniformly with replacement, queries both endpoints of each and
// rejects iff one of them is violated.
class MonotonicityTester {
 public:
  // Throws kInvalidSpanner unless h2 is a 2-TC-spanner of g.
  MonotonicityTester(const Digraph& g, EdgeList h2);

  // Throws kInvalidArgument unless 0 < eps <= 1.
  int64_t samples(double eps) const;
  TesterReport run(FunctionOracle& f, double eps, Rng& rng) const;
  const EdgeList& spanner() const { return h2_; }

 private:
  int n_;
  EdgeList h2_;
};

// One-shot form; verifies h2 on every call.
TesterReport monotonicity_tester(const Digraph& g, const EdgeList& h2,
                                 FunctionOracle& f, double eps, Rng& rng);

// Fewest points whose values must change to make f monotone on TC(G): n minus
// the largest vertex set spanning no violated comparable pair. Exhaustive;
// throws kTooLarge beyond cap vertices (default 18, TCS_SIZE_CAP overrides).
int distance_to_monotone_exact(const Digraph& g,
                               const std::vector<int64_t>& values, int cap = 0);

// Greedy maximal matching of violated comparable pairs in lexicographic
// order. Its size is at least half the distance to monotone.
EdgeList violation_matching(const Digraph& g, const std::vector<int64_t>& values);

struct DistanceBound {
  int value = 0;
  bool exact = false;  // otherwise the matching lower bound
};
DistanceBound distance_to_monotone(const Digraph& g,
                                   const std::vector<int64_t>& values,
                                   int cap = 0);

// Topological ranks with ceil(eps n / 2) disjoint comparable pairs swapped, so
// the planted pairs form a violation matching and the function is at least
// (eps/2)-far from monotone. Throws kInvalidArgument when eps is out of
// (0, 1] or not enough disjoint pairs are found.
struct PlantedFunction {
  std::vector<int64_t> values;
  EdgeList pairs;  // sorted
};
PlantedFunction plant_far_function(const Digraph& g, double eps, uint64_t seed);

}  // namespace tcspan

#endif  // TCSPAN_MONO_HPP_
