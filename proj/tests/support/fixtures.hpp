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

#ifndef MNHD_TESTS_FIXTURES_HPP
#define MNHD_TESTS_FIXTURES_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "mnhd/graph.hpp"
#include "mnhd/rational.hpp"

namespace mnhd::testing {

inline constexpr std::uint64_t kSeed = 20261018;

/// Connected simple graph on n vertices: a random spanning tree plus each
/// remaining pair with probability p.
inline Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<Edge> edges;
  std::vector<std::vector<bool>> used(n, std::vector<bool>(n, false));
  auto add = [&](Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    if (used[u][v]) return;
    used[u][v] = true;
    edges.emplace_back(u, v);
  };
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::shuffle(order.begin(), order.end(), rng);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    add(order[i], order[pick(rng)]);
  }
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) add(u, v);
    }
  }
  return Graph(n, edges);
}

/// p/q with |p| <= num_bound and 1 <= q <= den_bound.
inline Rational random_rational(std::mt19937_64& rng, long num_bound, long den_bound) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  return Rational(num(rng)) / den(rng);
}

/// Three pairwise distinct random rationals, in no particular order.
inline std::array<Rational, 3> random_distinct_triple(std::mt19937_64& rng) {
  std::array<Rational, 3> l;
  do {
    for (auto& x : l) x = random_rational(rng, 40, 9);
  } while (l[0] == l[1] || l[1] == l[2] || l[0] == l[2]);
  return l;
}

}  // namespace mnhd::testing

#endif  // MNHD_TESTS_FIXTURES_HPP
