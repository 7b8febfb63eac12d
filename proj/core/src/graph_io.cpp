// Copyright 2026 The mnhd Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mnhd/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <string_view>
#include <vector>

#include "mnhd/error.hpp"

namespace mnhd {

namespace {

bool blank(std::string_view line) {
  return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

// Exactly two non-negative integers separated by whitespace.
bool parse_pair(std::string_view line, std::size_t& first,
                std::size_t& second) {
  const char* p = line.data();
  const char* end = line.data() + line.size();
  auto skip_ws = [&] {
    while (p != end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
  };
  auto number = [&](std::size_t& out) {
    skip_ws();
    auto [next, ec] = std::from_chars(p, end, out);
    if (ec != std::errc() || next == p) return false;
    p = next;
    return true;
  };
  if (!number(first)) return false;
  if (p != end && *p != ' ' && *p != '\t') return false;
  if (!number(second)) return false;
  skip_ws();
  return p == end;
}

}  // namespace

Graph read_edge_list(std::istream& in, std::size_t vertex_limit) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;

  while (std::getline(in, line)) {
    ++line_no;
    if (blank(line)) continue;
    std::size_t x = 0;
    std::size_t y = 0;
    if (!parse_pair(line, x, y)) {
      throw ParseError(line_no, have_header
                                    ? "expected \"u v\" edge, got \"" + line + "\""
                                    : "expected header \"n m\", got \"" + line + "\"");
    }
    if (!have_header) {
      if (x == 0) throw ParseError(line_no, "vertex count must be positive");
      if (x > vertex_limit) {
        throw ParseError(line_no, "vertex count " + std::to_string(x) +
                                      " exceeds limit " +
                                      std::to_string(vertex_limit));
      }
      n = x;
      m = y;
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (edges.size() == m) {
      throw ParseError(line_no, "more than the declared " +
                                    std::to_string(m) + " edges");
    }
    if (x >= n || y >= n) {
      throw ParseError(line_no, "vertex id out of range [0, " +
                                    std::to_string(n) + ")");
    }
    if (x == y) throw ParseError(line_no, "self-loop at vertex " + std::to_string(x));
    edges.emplace_back(x, y);
    edge_lines.push_back(line_no);
  }

  if (!have_header) throw ParseError(line_no + 1, "missing header \"n m\"");
  if (edges.size() != m) {
    throw ParseError(line_no + 1, "truncated: expected " + std::to_string(m) +
                                      " edges, found " +
                                      std::to_string(edges.size()));
  }

  // Repeated edges are reported at the line of the repeat.
  std::vector<std::uint8_t> seen(n * n, 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto [u, v] = edges[i];
    if (seen[u * n + v]) {
      throw ParseError(edge_lines[i], "repeated edge " + std::to_string(u) +
                                          " " + std::to_string(v));
    }
    seen[u * n + v] = seen[v * n + u] = 1;
  }
  return Graph(n, edges);
}

Graph read_edge_list(const std::filesystem::path& path,
                     std::size_t vertex_limit) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(0, "cannot open " + path.string());
  }
  return read_edge_list(in, vertex_limit);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace mnhd
