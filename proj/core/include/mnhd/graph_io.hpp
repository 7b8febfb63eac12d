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

#ifndef MNHD_GRAPH_IO_HPP
#define MNHD_GRAPH_IO_HPP

#include <filesystem>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "mnhd/graph.hpp"

namespace mnhd {

// Edge-list format:
//   n m
//   u v      (m lines, 0-based ids)
// Blank lines are skipped. Anything else is rejected with the offending
// 1-based line number.

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

Graph read_edge_list(std::istream& in,
                     std::size_t vertex_limit = kDefaultVertexLimit);
Graph read_edge_list(const std::filesystem::path& path,
                     std::size_t vertex_limit = kDefaultVertexLimit);

void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace mnhd

#endif  // MNHD_GRAPH_IO_HPP
