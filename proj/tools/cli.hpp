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

#ifndef TCSPAN_TOOLS_CLI_HPP_
#define TCSPAN_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "tcspan/graph.hpp"

namespace tcspan::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;  // invalid spanner or failed bench rows
inline constexpr int kExitUsage = 2;
inline constexpr int kExitError = 3;   // library error, message on stderr

// Runs one command line (without the program name).
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

using Params = std::map<std::string, std::string>;

struct Instance {
  Digraph graph;
  Json sidecar;
};

// Families: line, tree, dag, planar, butterfly, broom, minrep, hard, nsc,
// 2tc-hard, 3nc. Generator randomness uses DeriveSeed(seed, family).
Instance GenerateInstance(const std::string& family, const Params& params,
                          uint64_t seed);

struct SpannerRequest {
  std::string algo = "lp";  // lp, largek, line, tree, pathsep, exact
  int k = 2;
  std::string mode = "tc-spanner";
  std::string provider = "planar";
  std::string rounding = "greedy";
  uint64_t seed = 0;
  int cap = 0;
  EdgeList clients;
  EdgeList servers;
  bool timing = true;
};

struct SpannerRun {
  EdgeList edges;
  Json report;  // schema 1
  bool valid = false;
};

// Runs the algorithm and always verifies its output.
SpannerRun RunSpanner(const Digraph& g, const SpannerRequest& req);

}  // namespace tcspan::cli

#endif  // TCSPAN_TOOLS_CLI_HPP_
