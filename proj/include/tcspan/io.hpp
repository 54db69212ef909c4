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

#ifndef TCSPAN_IO_HPP_
#define TCSPAN_IO_HPP_

#include <iosfwd>
#include <string>
#include <vector>

#include "tcspan/graph.hpp"

namespace tcspan {

// Edge-list text format:
//   tcs <n> <m>
//   <u> <v>        (m lines, 0-based, sorted)
// Lines end with LF. Writing then reading reproduces the bytes exactly.
std::string to_edge_list(int n, const EdgeList& edges);
std::string to_edge_list(const Digraph& g);
void write_edge_list(std::ostream& os, const Digraph& g);

struct ParsedEdgeList {
  int n = 0;
  EdgeList edges;
};
// Throws kParseError on malformed input.
ParsedEdgeList parse_edge_list(std::istream& is);
Digraph read_edge_list(std::istream& is);
Digraph read_edge_list_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

// Graphviz export. Edges listed in `highlight` that are absent from g are
// drawn dashed; labels, when given, name the vertices.
std::string to_dot(const Digraph& g, const EdgeList& highlight = {},
                   const std::vector<std::string>& labels = {});

}  // namespace tcspan

#endif  // TCSPAN_IO_HPP_
