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

#ifndef MNHD_CLASSICAL_PARAMS_HPP
#define MNHD_CLASSICAL_PARAMS_HPP

#include <array>
#include <string>
#include <vector>

#include "mnhd/rational.hpp"

namespace mnhd {

/// Classical parameters (D, b, alpha, beta) of a distance-regular graph.
///
/// Intersection numbers are
///   b_i = ([D] - [i]) (beta - alpha [i]),      0 <= i < D
///   c_i = [i] (1 + alpha [i-1]),               1 <= i <= D
/// where [j] = 1 + b + ... + b^(j-1) is the Gaussian binomial with basis b.
/// Nothing is checked on construction; use validate().
struct ClassicalParams {
  int diameter = 3;
  long b = 1;
  Rational alpha = 0;
  Rational beta = 1;

  bool operator==(const ClassicalParams&) const = default;
};

/// The intersection array {b_0, ..., b_{D-1}; c_1, ..., c_D} together with
/// the derived a_i = d - b_i - c_i, the degree d = b_0 and the vertex count.
struct IntersectionArray {
  std::vector<Rational> b_list;  // b_0 .. b_{D-1}
  std::vector<Rational> c_list;  // c_1 .. c_D
  std::vector<Rational> a_list;  // a_0 .. a_D
  Rational degree;
  Rational vertex_count;

  /// Builds a, d and n from the two defining lists. n is computed with
  /// vertex_count(); a zero c_i throws Error(DivisionByZero).
  static IntersectionArray from_lists(std::vector<Rational> b_list,
                                      std::vector<Rational> c_list);

  int diameter() const { return static_cast<int>(c_list.size()); }

  // Conventional extensions: b_D = 0 and c_0 = 0.
  Rational b_at(int i) const;
  Rational c_at(int i) const;
  Rational a_at(int i) const;

  bool operator==(const IntersectionArray&) const = default;
};

/// Which gamma_i of the unsorted Laplacian eigenvalue list sits at each
/// sorted position: lambda_{j+1} = gamma_{gamma_index[j]} (1-based gammas).
struct EigenvalueTriple {
  std::array<Rational, 3> lambda;
  std::array<int, 3> gamma_index{1, 2, 3};

  bool operator==(const EigenvalueTriple&) const = default;
};

struct Violation {
  std::string id;
  std::string detail;

  bool operator==(const Violation&) const = default;
};

struct FeasibilityReport {
  bool feasible = true;
  std::vector<Violation> violations;

  bool has(std::string_view id) const;
};

Rational gaussian_binomial(unsigned j, long b);

/// Evaluates the classical-parameter formulas with no feasibility checks.
/// Entries may be non-positive or fractional; n is left at 0 when some
/// c_i vanishes.
IntersectionArray raw_intersection_array(const ClassicalParams& params);

/// The intersection array of feasible parameters. Throws
/// Error(InfeasibleParams) naming every violated constraint otherwise.
IntersectionArray intersection_array(const ClassicalParams& params);

/// n = sum n_i with n_0 = 1 and n_{i+1} = b_i n_i / c_{i+1}.
Rational vertex_count(const IntersectionArray& array);

/// Collects every violated constraint: b not in {0, -1}, integrality of
/// (1+b) alpha, the diameter-3 parameter inequalities, and positivity and
/// integrality of every intersection number and of n.
FeasibilityReport validate(const ClassicalParams& params);

/// theta_i = b_i / b^i - [i] for i = 0..D. Requires feasible params.
std::vector<Rational> adjacency_eigenvalues(const ClassicalParams& params);

/// The three non-zero Laplacian eigenvalues d - theta_i sorted ascending.
/// Diameter 3 only. The ordering is checked exactly against the expected
/// permutation for the sign of b; a mismatch throws UnexpectedOrdering.
EigenvalueTriple laplacian_eigenvalues_sorted(const ClassicalParams& params);

std::string to_string(const ClassicalParams& params);
std::string to_string(const IntersectionArray& array);

}  // namespace mnhd

#endif  // MNHD_CLASSICAL_PARAMS_HPP
