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

#include "tcspan/mono.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tcspan {

namespace {

void check_eps(double eps) {
  if (!(eps > 0 && eps <= 1)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must lie in (0, 1]");
  }
}

void check_values(const Digraph& g, const std::vector<int64_t>& values) {
  if (static_cast<int>(values.size()) != g.n()) {
    throw Error(ErrorCode::kInvalidArgument, "one value per vertex required");
  }
}

}  // namespace

MonotonicityTester::MonotonicityTester(const Digraph& g, EdgeList h2)
    : n_(g.n()), h2_(std::move(h2)) {
  normalize_edges(h2_);
  VerifyReport rep = verify_spanner(g, h2_, 2);
  if (!rep.valid) {
    throw Error(ErrorCode::kInvalidSpanner,
                "not a 2-TC-spanner: " + rep.violation->to_string());
  }
}

int64_t MonotonicityTester::samples(double eps) const {
  check_eps(eps);
  if (h2_.empty()) return 0;
  const double x = 4.0 * static_cast<double>(h2_.size()) / (eps * n_);
  return static_cast<int64_t>(std::ceil(x - 1e-9));
}

TesterReport MonotonicityTester::run(FunctionOracle& f, double eps,
                                     Rng& rng) const {
  if (f.n() != n_) {
    throw Error(ErrorCode::kInvalidArgument, "function domain size mismatch");
  }
  TesterReport rep;
  rep.samples = samples(eps);
  const int64_t before = f.queries();
  rep.sampled.reserve(rep.samples);
  for (int64_t i = 0; i < rep.samples; ++i) {
    const Edge& e = h2_[rng.Uniform(h2_.size())];
    rep.sampled.push_back(e);
    const int64_t fu = f(e.u);
    const int64_t fv = f(e.v);
    if (fu > fv && !rep.violated) rep.violated = e;
  }
  rep.accept = !rep.violated.has_value();
  rep.queries = f.queries() - before;
  return rep;
}

TesterReport monotonicity_tester(const Digraph& g, const EdgeList& h2,
                                 FunctionOracle& f, double eps, Rng& rng) {
  return MonotonicityTester(g, h2).run(f, eps, rng);
}

int distance_to_monotone_exact(const Digraph& g,
                               const std::vector<int64_t>& values, int cap) {
  check_values(g, values);
  const int n = g.n();
  const int limit = SizeCap(cap > 0 ? cap : 18);
  if (n > limit) {
    throw Error(ErrorCode::kTooLarge, std::to_string(n) +
                                          " points exceed exhaustive cap " +
                                          std::to_string(limit));
  }
  if (n == 0) return 0;
  const ReachMatrix& r = transitive_closure(g);
  std::vector<uint32_t> conflict(n, 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && r.reaches(u, v) && values[u] > values[v]) {
        conflict[u] |= uint32_t{1} << v;
        conflict[v] |= uint32_t{1} << u;
      }
  // good[mask]: mask spans no violated pair.
  std::vector<uint8_t> good(size_t{1} << n, 0);
  good[0] = 1;
  int best = 0;
  for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
    const int low = __builtin_ctz(mask);
    const uint32_t rest = mask & (mask - 1);
    good[mask] = good[rest] && (conflict[low] & rest) == 0;
    if (good[mask]) best = std::max(best, __builtin_popcount(mask));
  }
  return n - best;
}

EdgeList violation_matching(const Digraph& g, const std::vector<int64_t>& values) {
  check_values(g, values);
  EdgeList m;
  std::vector<bool> used(g.n(), false);
  for (const Edge& e : comparable_pairs(g)) {
    if (used[e.u] || used[e.v] || values[e.u] <= values[e.v]) continue;
    used[e.u] = used[e.v] = true;
    m.push_back(e);
  }
  return m;
}

DistanceBound distance_to_monotone(const Digraph& g,
                                   const std::vector<int64_t>& values, int cap) {
  if (g.n() <= SizeCap(cap > 0 ? cap : 18)) {
    return {distance_to_monotone_exact(g, values, cap), true};
  }
  return {static_cast<int>(violation_matching(g, values).size()), false};
}

PlantedFunction plant_far_function(const Digraph& g, double eps, uint64_t seed) {
  check_eps(eps);
  const int n = g.n();
  const int want = static_cast<int>(std::ceil(eps * n / 2 - 1e-9));
  PlantedFunction pf;
  pf.values.assign(n, 0);
  const auto& order = g.topological_order();
  for (int i = 0; i < n; ++i) pf.values[order[i]] = i;
  EdgeList pairs = comparable_pairs(g);
  Rng rng(DeriveSeed(seed, "plant"));
  rng.Shuffle(pairs.begin(), pairs.end());
  std::vector<bool> used(n, false);
  for (const Edge& e : pairs) {
    if (static_cast<int>(pf.pairs.size()) == want) break;
    if (used[e.u] || used[e.v]) continue;
    used[e.u] = used[e.v] = true;
    std::swap(pf.values[e.u], pf.values[e.v]);
    pf.pairs.push_back(e);
  }
  if (static_cast<int>(pf.pairs.size()) < want) {
    throw Error(ErrorCode::kInvalidArgument,
                "only " + std::to_string(pf.pairs.size()) +
                    " disjoint comparable pairs found, " + std::to_string(want) +
                    " needed");
  }
  std::sort(pf.pairs.begin(), pf.pairs.end());
  return pf;
}

}  // namespace tcspan
