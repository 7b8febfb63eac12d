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

#ifndef MNHD_GRAPH_HPP
#define MNHD_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mnhd/classical_params.hpp"

namespace mnhd {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr std::size_t kDefaultVertexLimit = 5000;

/// Simple undirected graph with dense adjacency. Immutable once built.
class Graph {
 public:
  /// Throws Error(InvalidArgument) on loops, repeated edges or ids out of
  /// range.
  Graph(std::size_t vertex_count, const std::vector<Edge>& edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u * n_ + v] != 0; }
  const std::vector<Vertex>& neighbors(Vertex u) const { return neighbors_[u]; }
  std::size_t degree(Vertex u) const { return neighbors_[u].size(); }

  /// The common degree, if every vertex has the same one.
  std::optional<std::size_t> regular_degree() const;

  std::vector<Edge> edges() const;

 private:
  std::size_t n_;
  std::size_t edge_count_ = 0;
  std::vector<std::uint8_t> adjacency_;
  std::vector<std::vector<Vertex>> neighbors_;
};

// Standard families. Each throws Error(SizeLimit) when the instance would
// have more than `limit` vertices.
Graph hypercube(unsigned dimension, std::size_t limit = kDefaultVertexLimit);
Graph hamming(unsigned length, unsigned alphabet,
              std::size_t limit = kDefaultVertexLimit);
Graph johnson(unsigned n, unsigned k, std::size_t limit = kDefaultVertexLimit);
Graph cycle(std::size_t n, std::size_t limit = kDefaultVertexLimit);
Graph complete(std::size_t n, std::size_t limit = kDefaultVertexLimit);
Graph path(std::size_t n, std::size_t limit = kDefaultVertexLimit);
Graph icosahedron();

/// All-pairs shortest-path lengths. Unreachable pairs hold no value.
class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g);

  std::size_t size() const { return n_; }
  std::optional<std::size_t> at(Vertex u, Vertex v) const;
  bool reachable(Vertex u, Vertex v) const {
    return dist_[u * n_ + v] != kUnreachable;
  }
  bool connected() const { return connected_; }
  /// Largest finite distance.
  std::size_t diameter() const { return diameter_; }

 private:
  static constexpr std::uint32_t kUnreachable = UINT32_MAX;

  std::size_t n_;
  std::vector<std::uint32_t> dist_;
  bool connected_ = true;
  std::size_t diameter_ = 0;
};

DistanceMatrix distances(const Graph& g);

/// The intersection array when g is distance-regular, otherwise nothing.
/// Candidate constants are read off vertex 0 and then checked on every
/// ordered pair. Throws Error(Disconnected) for a disconnected graph.
std::optional<IntersectionArray> check_distance_regular(const Graph& g);

/// True iff diag(A^l) is constant for 2 <= l <= max_len, computed with
/// exact integers.
bool check_walk_regular(const Graph& g, unsigned max_len);

}  // namespace mnhd

#endif  // MNHD_GRAPH_HPP
