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

#include "mnhd/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>

#include "mnhd/error.hpp"

namespace mnhd {

Graph::Graph(std::size_t vertex_count, const std::vector<Edge>& edges)
    : n_(vertex_count),
      adjacency_(vertex_count * vertex_count, 0),
      neighbors_(vertex_count) {
  for (const auto& [u, v] : edges) {
    if (u >= n_ || v >= n_) {
      throw Error(ErrorCode::InvalidArgument,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) +
                      ") out of range for " + std::to_string(n_) +
                      " vertices");
    }
    if (u == v) {
      throw Error(ErrorCode::InvalidArgument,
                  "loop at vertex " + std::to_string(u));
    }
    if (adjacency_[u * n_ + v]) {
      throw Error(ErrorCode::InvalidArgument,
                  "repeated edge (" + std::to_string(u) + "," +
                      std::to_string(v) + ")");
    }
    adjacency_[u * n_ + v] = adjacency_[v * n_ + u] = 1;
    neighbors_[u].push_back(v);
    neighbors_[v].push_back(u);
    ++edge_count_;
  }
  for (auto& list : neighbors_) std::sort(list.begin(), list.end());
}

std::optional<std::size_t> Graph::regular_degree() const {
  if (n_ == 0) return std::nullopt;
  const std::size_t d = degree(0);
  for (Vertex u = 1; u < n_; ++u) {
    if (degree(u) != d) return std::nullopt;
  }
  return d;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

namespace {

void check_limit(std::size_t n, std::size_t limit, const std::string& name) {
  if (n > limit) {
    throw Error(ErrorCode::SizeLimit, name + " would have " +
                                          std::to_string(n) +
                                          " vertices (limit " +
                                          std::to_string(limit) + ")");
  }
}

// Overflow-safe q^len bounded by limit + 1.
std::size_t bounded_power(std::size_t q, unsigned len, std::size_t limit) {
  std::size_t result = 1;
  for (unsigned i = 0; i < len; ++i) {
    if (q != 0 && result > (limit + 1) / q + 1) return limit + 1;
    result *= q;
  }
  return result;
}

}  // namespace

Graph hypercube(unsigned dimension, std::size_t limit) {
  return hamming(dimension, 2, limit);
}

Graph hamming(unsigned length, unsigned alphabet, std::size_t limit) {
  if (alphabet < 2 || length < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "hamming needs length >= 1 and alphabet >= 2");
  }
  const std::size_t n = bounded_power(alphabet, length, limit);
  check_limit(n, limit,
              "hamming(" + std::to_string(length) + "," +
                  std::to_string(alphabet) + ")");
  std::vector<Edge> edges;
  // Words are base-q digits of the vertex id; change one digit upwards.
  for (Vertex u = 0; u < n; ++u) {
    std::size_t place = 1;
    for (unsigned pos = 0; pos < length; ++pos, place *= alphabet) {
      const std::size_t digit = (u / place) % alphabet;
      for (std::size_t other = digit + 1; other < alphabet; ++other) {
        edges.emplace_back(u, u + (other - digit) * place);
      }
    }
  }
  return Graph(n, edges);
}

Graph johnson(unsigned n, unsigned k, std::size_t limit) {
  if (n > 62 || k > n) {
    throw Error(ErrorCode::InvalidArgument,
                "johnson needs k <= n <= 62");
  }
  std::vector<std::uint64_t> subsets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<unsigned>(std::popcount(mask)) == k) {
      subsets.push_back(mask);
      check_limit(subsets.size(), limit,
                  "johnson(" + std::to_string(n) + "," + std::to_string(k) +
                      ")");
    }
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t j = i + 1; j < subsets.size(); ++j) {
      if (static_cast<unsigned>(std::popcount(subsets[i] & subsets[j])) ==
          k - 1) {
        edges.emplace_back(i, j);
      }
    }
  }
  return Graph(subsets.size(), edges);
}

Graph cycle(std::size_t n, std::size_t limit) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "cycle needs n >= 3");
  check_limit(n, limit, "cycle(" + std::to_string(n) + ")");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return Graph(n, edges);
}

Graph complete(std::size_t n, std::size_t limit) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "complete needs n >= 1");
  check_limit(n, limit, "complete(" + std::to_string(n) + ")");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph path(std::size_t n, std::size_t limit) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "path needs n >= 1");
  check_limit(n, limit, "path(" + std::to_string(n) + ")");
  std::vector<Edge> edges;
  for (Vertex u = 0; u + 1 < n; ++u) edges.emplace_back(u, u + 1);
  return Graph(n, edges);
}

Graph icosahedron() {
  // Vertex 0 on top, 1..5 upper pentagon, 6..10 lower pentagon, 11 bottom.
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    const Vertex up = 1 + i;
    const Vertex up_next = 1 + (i + 1) % 5;
    const Vertex low = 6 + i;
    const Vertex low_next = 6 + (i + 1) % 5;
    edges.emplace_back(0, up);
    edges.emplace_back(up, up_next);
    edges.emplace_back(up, low);
    edges.emplace_back(up_next, low);
    edges.emplace_back(low, low_next);
    edges.emplace_back(low, 11);
  }
  return Graph(12, edges);
}

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.vertex_count()), dist_(n_ * n_, kUnreachable) {
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < n_; ++s) {
    std::uint32_t* row = &dist_[s * n_];
    row[s] = 0;
    queue.assign(1, s);
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex v : g.neighbors(u)) {
        if (row[v] == kUnreachable) {
          row[v] = row[u] + 1;
          diameter_ = std::max<std::size_t>(diameter_, row[v]);
          queue.push_back(v);
        }
      }
    }
    if (connected_) {
      connected_ = std::none_of(row, row + n_, [](std::uint32_t d) {
        return d == kUnreachable;
      });
    }
  }
}

std::optional<std::size_t> DistanceMatrix::at(Vertex u, Vertex v) const {
  const std::uint32_t d = dist_[u * n_ + v];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

DistanceMatrix distances(const Graph& g) { return DistanceMatrix(g); }

std::optional<IntersectionArray> check_distance_regular(const Graph& g) {
  const std::size_t n = g.vertex_count();
  const DistanceMatrix dist(g);
  if (!dist.connected()) {
    throw Error(ErrorCode::Disconnected, "graph is not connected");
  }
  if (n < 2) return std::nullopt;
  const std::size_t D = dist.diameter();

  // counts[x][y]: neighbours of y at distance i-1, i, i+1 from x.
  auto counts = [&](Vertex x, Vertex y) {
    const std::size_t i = *dist.at(x, y);
    std::array<std::size_t, 3> c{0, 0, 0};
    for (Vertex z : g.neighbors(y)) {
      const std::size_t dz = *dist.at(x, z);
      if (dz + 1 == i) {
        ++c[0];
      } else if (dz == i) {
        ++c[1];
      } else {
        ++c[2];
      }
    }
    return c;
  };

  // Candidates from base vertex 0.
  std::vector<std::array<std::size_t, 3>> expected(D + 1);
  std::vector<bool> seen(D + 1, false);
  for (Vertex y = 0; y < n; ++y) {
    const std::size_t i = *dist.at(0, y);
    if (!seen[i]) {
      expected[i] = counts(0, y);
      seen[i] = true;
    }
  }
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = 0; y < n; ++y) {
      if (counts(x, y) != expected[*dist.at(x, y)]) return std::nullopt;
    }
  }

  std::vector<Rational> bs;
  std::vector<Rational> cs;
  for (std::size_t i = 0; i < D; ++i) {
    bs.emplace_back(static_cast<unsigned long>(expected[i][2]));
  }
  for (std::size_t i = 1; i <= D; ++i) {
    cs.emplace_back(static_cast<unsigned long>(expected[i][0]));
  }
  return IntersectionArray::from_lists(std::move(bs), std::move(cs));
}

bool check_walk_regular(const Graph& g, unsigned max_len) {
  if (max_len < 2) {
    throw Error(ErrorCode::InvalidArgument, "max_len must be at least 2");
  }
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  // walks = A^l, advanced by one sparse multiplication per step.
  std::vector<Integer> walks(n * n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) walks[u * n + v] = 1;
  }
  std::vector<Integer> next(n * n);
  for (unsigned len = 2; len <= max_len; ++len) {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        Integer& acc = next[u * n + v];
        acc = 0;
        for (Vertex w : g.neighbors(v)) acc += walks[u * n + w];
      }
    }
    walks.swap(next);
    for (Vertex u = 1; u < n; ++u) {
      if (walks[u * n + u] != walks[0]) return false;
    }
  }
  return true;
}

}  // namespace mnhd
