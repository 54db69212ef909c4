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

#ifndef TCSPAN_EXACT_HPP_
#define TCSPAN_EXACT_HPP_

#include <cstdint>
#include <vector>

#include "tcspan/generators.hpp"
#include "tcspan/graph.hpp"

namespace tcspan {

struct ExactOptions {
  // Maximum number of free candidates (shortcuts, vertices or sets); 0 picks
  // the per-problem default, itself overridable through TCS_SIZE_CAP.
  int cap = 0;
  // Return the lexicographically least optimal witness. Costs extra
  // feasibility searches.
  bool lex_least = true;
};

struct ExactSpannerResult {
  int64_t size = 0;
  EdgeList witness;  // sorted
  int64_t nodes = 0;  // branch-and-bound nodes explored
  int candidates = 0;
};

// Sparsest k-TC-spanner of a DAG. TR edges are mandatory; the search runs
// over TC \ TR (default cap 22). Throws kNotADag, kTooLarge.
ExactSpannerResult exact_sparsest_tc_spanner(const Digraph& g, int k,
                                             const ExactOptions& opt = {});

// Sparsest subgraph H of G with d_H(u, v) <= k for every edge (u, v) of G.
// Edges without an alternative path of length <= k are mandatory; the search
// runs over the rest (default cap 22). Throws kTooLarge.
ExactSpannerResult exact_directed_spanner(const Digraph& g, int k,
                                          const ExactOptions& opt = {});

struct ExactCoverResult {
  int64_t size = 0;
  std::vector<int> witness;  // sorted vertex or set ids
  int64_t nodes = 0;
};

// Minimum rep-cover over the non-isolated vertices (default cap 24).
ExactCoverResult exact_rep_cover(const MinRepInstance& inst,
                                 const ExactOptions& opt = {});
// Minimum set cover (default cap 24 sets). Throws kInfeasible when some
// element is in no set.
ExactCoverResult exact_set_cover(const SetCoverInstance& inst,
                                 const ExactOptions& opt = {});

}  // namespace tcspan

#endif  // TCSPAN_EXACT_HPP_
