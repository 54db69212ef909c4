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

#ifndef TCSPAN_APPROX_HPP_
#define TCSPAN_APPROX_HPP_

#include <cstdint>
#include <string_view>
#include <vector>

#include "tcspan/frac.hpp"
#include "tcspan/graph.hpp"

namespace tcspan {

enum class SpannerMode { kDirected, kClientServer, kDiameter, kTc };
std::string_view ModeName(SpannerMode mode);
// Accepts "directed", "client-server", "k-diameter", "tc-spanner".
SpannerMode ParseMode(std::string_view name);

// One spanning problem: keep every constraint pair within distance k using
// only allowed edges of the working graph.
struct SpannerTask {
  Digraph base;     // the input graph G
  Digraph working;  // G, or TC(G) in tc-spanner mode
  EdgeList pairs;
  EdgeList allowed;  // subset of working edges (server edges)
  int k = 2;
  SpannerMode mode = SpannerMode::kTc;
};

// Constraint pairs per mode: edges of G (directed), client edges
// (client-server), all comparable pairs u != v (k-diameter), edges of TC(G)
// (tc-spanner).
EdgeList variant_constraints(const Digraph& g, SpannerMode mode,
                             const EdgeList& clients = {});

// Client-server mode uses `clients` as constraints and `servers` (default:
// all edges) as the allowed set; other modes ignore both. Throws
// kInvalidArgument for client or server edges outside G.
SpannerTask make_task(const Digraph& g, SpannerMode mode, int k,
                      const EdgeList& clients = {},
                      const EdgeList& servers = {});

struct LpSamplingOptions {
  bool greedy = true;
  uint64_t seed = 0;  // random mode only
  double c_r = 3.0;   // sample size r = ceil(c_r (n ln n)^(1-1/k))
  FracOptions frac;
};

struct LpSamplingReport {
  SpannerResult result;
  FractionalAssignment x;  // over the allowed edges
  double threshold = 0;
  int sample_size = 0;  // r
  int64_t threshold_edges = 0;
  std::vector<Vertex> hubs;  // sampled or greedy, in selection order
  int64_t repairs = 0;       // hubs added for pairs left uncovered
};

// LP rounding plus BFS hubs. The output always spans every constraint pair.
// Throws kInvalidArgument unless 2 <= k <= 16, and propagates frac-solver
// errors.
LpSamplingReport lp_sampling_spanner(const SpannerTask& task,
                                     const LpSamplingOptions& opt = {});

// Descendants of v at BFS depth congruent to the least populated residue
// modulo ceil(k'/4) (depth >= 1). Every descendant is within ceil(k'/4) of v
// or below some landmark at distance < ceil(k'/4). Requires k' >= 1.
std::vector<Vertex> landmark_set(const Digraph& h, Vertex v, int k_prime);

// Greedy cover of the pairs with d_H(u, v) > ceil(3k'/8): w covers (u, v)
// when d_H(u, w) <= ceil(3k'/8) and w reaches v. H must be a DAG.
std::vector<Vertex> middle_set(const Digraph& h, int k_prime);

struct LargeKReport {
  SpannerResult result;
  int k_prime = 0;
  Condensation condensation;
  Digraph reduced;  // TR of the condensation
  std::vector<Vertex> middle;  // condensed ids
  std::vector<int64_t> landmark_sizes;  // |S_w| per middle vertex
  bool reduction_only = false;
};

// Throws kKTooSmall for k < 6.
LargeKReport largek_spanner(const Digraph& g, int k);

}  // namespace tcspan

#endif  // TCSPAN_APPROX_HPP_
