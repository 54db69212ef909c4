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

#ifndef TCSPAN_FRAC_HPP_
#define TCSPAN_FRAC_HPP_

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "tcspan/graph.hpp"

namespace tcspan {

using BigCount = boost::multiprecision::cpp_int;

inline constexpr int kMaxFracK = 16;

// Number of (not necessarily simple) u -> v walks with 1..k edges.
BigCount count_paths(const Digraph& g, Vertex u, Vertex v, int k);

// Per-edge values over g.edges() (edge id = index in the sorted edge list).
struct FractionalAssignment {
  EdgeList edges;
  std::vector<double> x;
  double objective = 0;
  double residual = 0;  // max violation of box and pair constraints
  int64_t iterations = 0;
  std::string engine;
};

struct SeparationOutcome {
  enum class Kind { kFeasible, kBelowZero, kAboveOne, kBudget, kPair };
  Kind kind = Kind::kFeasible;
  int edge = -1;  // box violations
  Edge pair{};    // kPair
  // kPair: coefficient of every edge, the number of u -> v walks of length
  // <= k whose minimum (ascending x, then edge id) is that edge.
  std::vector<BigCount> coefficients;
  double lhs = 0;  // kPair: sum_j c_j x_j
};

struct OracleOptions {
  double tol = 1e-6;
  double budget = std::numeric_limits<double>::infinity();
};

// Checks the box constraints, then the budget, then every pair in order and
// reports the first one whose walk-minimum sum is below 1 - tol.
SeparationOutcome separation_oracle(const Digraph& g, const EdgeList& pairs,
                                    const std::vector<double>& x, int k,
                                    const OracleOptions& opt = {});

// sum over u -> v walks of length <= k of the minimum x along the walk.
double walk_min_sum(const Digraph& g, Edge pair, const std::vector<double>& x,
                    int k);

// Largest constraint or box violation at x.
double fractional_residual(const Digraph& g, const EdgeList& pairs,
                           const std::vector<double>& x, int k);

struct FracOptions {
  enum class Engine { kAuto, kExplicit, kCuttingPlane };
  Engine engine = Engine::kAuto;
  double tol = 1e-6;
  // kAuto uses the explicit program up to this many walk variables.
  int64_t explicit_walk_limit = 300;
};

// Minimizes sum x_e over [0,1]^E subject to, for every pair (u, v), the sum
// over u -> v walks of length <= k of their minimum edge value being >= 1.
// Throws kInfeasible when a pair has no such walk, kInvalidArgument for k
// outside [1, 16].
FractionalAssignment solve_fractional(const Digraph& g, const EdgeList& pairs,
                                      int k, const FracOptions& opt = {});

}  // namespace tcspan

#endif  // TCSPAN_FRAC_HPP_
