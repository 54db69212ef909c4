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

#include "tcspan/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "tcspan/common.hpp"

namespace tcspan {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  throw Error(ErrorCode::kParseError,
              "line " + std::to_string(line) + ": " + what);
}

// Splits on spaces/tabs; rejects anything else.
std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int64_t parse_int(std::string_view tok, int line) {
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    parse_fail(line, "expected integer, got '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

std::string to_edge_list(int n, const EdgeList& edges) {
  EdgeList sorted = edges;
  normalize_edges(sorted);
  std::string out = "tcs " + std::to_string(n) + " " +
                    std::to_string(sorted.size()) + "\n";
  for (const Edge& e : sorted) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

std::string to_edge_list(const Digraph& g) {
  return to_edge_list(g.n(), g.edges());
}

void write_edge_list(std::ostream& os, const Digraph& g) { os << to_edge_list(g); }

ParsedEdgeList parse_edge_list(std::istream& is) {
  std::string line;
  int lineno = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(is, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') {
        parse_fail(lineno, "CR line ending");
      }
      if (!tokens(line).empty()) return true;
    }
    return false;
  };
  if (!next_line()) parse_fail(lineno, "missing header");
  auto head = tokens(line);
  if (head.size() != 3 || head[0] != "tcs") {
    parse_fail(lineno, "header must be 'tcs <n> <m>'");
  }
  int64_t n = parse_int(head[1], lineno);
  int64_t m = parse_int(head[2], lineno);
  if (n < 0 || n > (int64_t{1} << 30) || m < 0) {
    parse_fail(lineno, "bad header counts");
  }
  ParsedEdgeList parsed;
  parsed.n = static_cast<int>(n);
  parsed.edges.reserve(static_cast<size_t>(m));
  for (int64_t i = 0; i < m; ++i) {
    if (!next_line()) parse_fail(lineno, "fewer edges than declared");
    auto t = tokens(line);
    if (t.size() != 2) parse_fail(lineno, "edge line must be '<u> <v>'");
    int64_t u = parse_int(t[0], lineno), v = parse_int(t[1], lineno);
    if (u < 0 || v < 0 || u >= n || v >= n) parse_fail(lineno, "vertex out of range");
    if (u == v) parse_fail(lineno, "self-loop");
    parsed.edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (next_line()) parse_fail(lineno, "trailing content after declared edges");
  size_t before = parsed.edges.size();
  normalize_edges(parsed.edges);
  if (parsed.edges.size() != before) parse_fail(lineno, "duplicate edge");
  return parsed;
}

Digraph read_edge_list(std::istream& is) {
  ParsedEdgeList p = parse_edge_list(is);
  return Digraph(p.n, std::move(p.edges));
}

Digraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  return read_edge_list(in);
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "cannot write " + path);
  out << contents;
}

std::string to_dot(const Digraph& g, const EdgeList& highlight,
                   const std::vector<std::string>& labels) {
  std::ostringstream os;
  os << "digraph G {\n";
  for (Vertex v = 0; v < g.n(); ++v) {
    os << "  " << v;
    if (static_cast<size_t>(v) < labels.size()) {
      os << " [label=\"" << labels[v] << "\"]";
    }
    os << ";\n";
  }
  for (const Edge& e : g.edges()) os << "  " << e.u << " -> " << e.v << ";\n";
  EdgeList extra = highlight;
  normalize_edges(extra);
  for (const Edge& e : extra) {
    if (!g.has_edge(e.u, e.v)) {
      os << "  " << e.u << " -> " << e.v << " [style=dashed];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace tcspan
