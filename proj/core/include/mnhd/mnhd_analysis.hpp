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

#ifndef MNHD_MNHD_ANALYSIS_HPP
#define MNHD_MNHD_ANALYSIS_HPP

// Exact evaluation of the Delta quantities of a regular graph with four
// distinct Laplacian eigenvalues 0 < l1 < l2 < l3, and of the sufficient
// conditions for r_t(u,v) = H_t(u,v)/H_t(u,u) to be non-decreasing.
//
// Everything here is templated on the number field T so the same formulas
// run over Rational (classical parameters), QuadraticNumber (antipodal
// arrays with irrational spectrum) and double (numeric probes). T needs
// + - * /, construction from long and a free `int sign(const T&)`.

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mnhd/classical_params.hpp"
#include "mnhd/delta_profile.hpp"
#include "mnhd/error.hpp"
#include "mnhd/quadratic.hpp"
#include "mnhd/rational.hpp"

namespace mnhd {

enum class SufficientCase { I = 1, II = 2, III = 3 };

std::string_view to_string(SufficientCase c) noexcept;

template <class T>
struct SpectrumContext {
  T degree;
  T vertex_count;
  std::array<T, 3> lambda;  // ascending
  std::array<T, 3> C;       // C_i = 1 / prod_{j != i} (lambda_j - lambda_i)
};

/// L(u,v) and L^2(u,v) for one vertex pair.
template <class T>
struct LaplacianPairData {
  T L;
  T L2;

  bool operator==(const LaplacianPairData&) const = default;
};

/// The three intersection numbers the per-distance formulas need.
template <class T>
struct DrgNumbers {
  T a1;
  T b1;
  T c2;
};

/// C_1, C_2, C_3 for three values in any order. Throws DegenerateSpectrum
/// when two of them coincide.
template <class T>
std::array<T, 3> lagrange_constants(const std::array<T, 3>& l) {
  std::array<T, 3> c;
  for (int i = 0; i < 3; ++i) {
    T denom = T(1);
    for (int j = 0; j < 3; ++j) {
      if (j == i) continue;
      const T diff = l[j] - l[i];
      if (sign(diff) == 0) {
        throw Error(ErrorCode::DegenerateSpectrum,
                    "eigenvalues " + std::to_string(i + 1) + " and " +
                        std::to_string(j + 1) + " coincide");
      }
      denom = denom * diff;
    }
    c[i] = T(1) / denom;
  }
  return c;
}

/// Requires 0 < l1 < l2 < l3 and d, n > 0.
template <class T>
SpectrumContext<T> make_context(const T& d, const T& n,
                                const std::array<T, 3>& lambdas) {
  if (sign(d) <= 0 || sign(n) <= 0) {
    throw Error(ErrorCode::InvalidArgument, "degree and vertex count must be positive");
  }
  SpectrumContext<T> ctx{d, n, lambdas, lagrange_constants(lambdas)};
  if (!(sign(lambdas[0]) > 0 && sign(T(lambdas[1] - lambdas[0])) > 0 &&
        sign(T(lambdas[2] - lambdas[1])) > 0)) {
    throw Error(ErrorCode::OrderingViolation,
                "eigenvalues must satisfy 0 < l1 < l2 < l3");
  }
  return ctx;
}

inline SpectrumContext<Rational> make_context(const Rational& d,
                                              const Rational& n,
                                              const EigenvalueTriple& triple) {
  return make_context(d, n, triple.lambda);
}

/// L^2(x,y) of a distance-regular graph by distance: d^2+d, -2d+a_1, c_2,
/// then 0. Distances outside 0..3 throw BadDistance.
template <class T>
T l2_entry(const T& d, const T& a1, const T& c2, int dist) {
  switch (dist) {
    case 0: return d * d + d;
    case 1: return T(-2) * d + a1;
    case 2: return c2;
    case 3: return T(0);
  }
  throw Error(ErrorCode::BadDistance, "distance " + std::to_string(dist));
}

Rational l2_entry(const IntersectionArray& array, int dist);

template <class T>
LaplacianPairData<T> drg_pair_data(const T& d, const DrgNumbers<T>& num,
                                   int dist) {
  return {dist == 1 ? T(-1) : T(0), l2_entry(d, num.a1, num.c2, dist)};
}

namespace detail {

// Closed forms for arbitrary (not necessarily sorted) lambdas.
template <class T>
DeltaProfile<T> closed_form(const T& d, const T& n, const std::array<T, 3>& l,
                            const std::array<T, 3>& C,
                            const LaplacianPairData<T>& pair) {
  const T dd = d * d + d;
  auto single = [&](int i, int j, int k) {
    return T(C[i] * (dd - pair.L2 + (pair.L - d) * (l[j] + l[k]) + l[j] * l[k]));
  };
  const T w = (T(1) - n) / n;
  auto cross = [&](int i, int j, int k) {
    const T& lk = l[k];
    const T bracket = (d + w * lk) * pair.L2 - (dd + w * lk * lk) * pair.L -
                      (dd * lk - d * lk * lk) / n;
    return T(C[i] * C[j] * (l[j] - l[i]) * bracket);
  };
  DeltaProfile<T> p;
  p.delta1 = single(0, 1, 2);
  p.delta2 = single(1, 0, 2);
  p.delta3 = single(2, 0, 1);
  p.delta12 = cross(0, 1, 2);
  p.delta13 = cross(0, 2, 1);
  p.delta23 = cross(1, 2, 0);
  return p;
}

// n Delta_ij / (C_i C_j (l_j - l_i)) at distance 1 in terms of b_1.
template <class T>
T cross_bracket_distance1(const T& d, const T& n, const T& lk, const T& b1) {
  return T(-(n - T(1) - d) * lk * (lk - d - T(1)) +
           ((n - T(1)) * lk - n * d) * b1);
}

}  // namespace detail

/// All six Delta values from (d, n, lambdas, L(u,v), L^2(u,v)) alone.
template <class T>
DeltaProfile<T> delta_closed_form(const SpectrumContext<T>& ctx,
                                  const LaplacianPairData<T>& pair) {
  return detail::closed_form(ctx.degree, ctx.vertex_count, ctx.lambda, ctx.C,
                             pair);
}

/// The same six values through the per-distance simplifications that hold
/// for a distance-regular graph (distance 1, 2 or 3).
template <class T>
DeltaProfile<T> delta_drg(const SpectrumContext<T>& ctx,
                          const DrgNumbers<T>& num, int dist) {
  if (dist < 1 || dist > 3) {
    throw Error(ErrorCode::BadDistance, "distance " + std::to_string(dist));
  }
  const T& d = ctx.degree;
  const T& n = ctx.vertex_count;
  const auto& l = ctx.lambda;
  const auto& C = ctx.C;

  auto single = [&](int i, int j, int k) {
    T bracket;
    if (dist == 1) {
      bracket = (l[j] - d - T(1)) * (l[k] - d - T(1)) + d - num.a1 - T(1);
    } else if (dist == 2) {
      bracket = (l[j] - d) * (l[k] - d) + d - num.c2;
    } else {
      bracket = (l[j] - d) * (l[k] - d) + d;
    }
    return T(C[i] * bracket);
  };
  auto cross = [&](int i, int j, int k) {
    const T& lk = l[k];
    T bracket;
    if (dist == 1) {
      bracket = detail::cross_bracket_distance1(d, n, lk, num.b1);
    } else {
      bracket = d * lk * (lk - d - T(1));
      if (dist == 2) bracket = bracket - ((n - T(1)) * lk - n * d) * num.c2;
    }
    return T(C[i] * C[j] * (l[j] - l[i]) * bracket / n);
  };

  DeltaProfile<T> p;
  p.delta1 = single(0, 1, 2);
  p.delta2 = single(1, 0, 2);
  p.delta3 = single(2, 0, 1);
  p.delta12 = cross(0, 1, 2);
  p.delta13 = cross(0, 2, 1);
  p.delta23 = cross(1, 2, 0);
  return p;
}

DrgNumbers<Rational> drg_numbers(const IntersectionArray& array);

DeltaProfile<Rational> delta_drg(const SpectrumContext<Rational>& ctx,
                                 const IntersectionArray& array, int dist);

/// Delta_12 at distance 1 via the b_1 form of the cross bracket.
template <class T>
T delta12_distance1(const SpectrumContext<T>& ctx, const T& b1) {
  const auto& l = ctx.lambda;
  const T bracket = detail::cross_bracket_distance1(ctx.degree, ctx.vertex_count,
                                                    l[2], b1);
  return T(ctx.C[0] * ctx.C[1] * (l[1] - l[0]) * bracket / ctx.vertex_count);
}

Rational delta12_distance1(const SpectrumContext<Rational>& ctx,
                           const IntersectionArray& array);

/// LHS - RHS of
///   l_i l_j/n D_i + l_j l_i/n D_j + l_k (l_i + l_j - l_k)/n D_k
///     - (l_k - l_i)(l_k - l_j)(D_ik + D_jk)  =  L^2 - L (l_i + l_j)
/// where the Deltas are the closed forms built from `lambdas` (pairwise
/// distinct, any order) and `roles` is a permutation of {1, 2, 3}.
template <class T>
T identity_residual(const std::array<T, 3>& lambdas, const T& d, const T& n,
                    const T& L, const T& L2, const std::array<int, 3>& roles) {
  const std::array<T, 3> C = lagrange_constants(lambdas);
  const DeltaProfile<T> p = detail::closed_form(d, n, lambdas, C, {L, L2});
  const auto [i, j, k] = roles;
  if (i == j || j == k || i == k || i < 1 || j < 1 || k < 1 || i > 3 ||
      j > 3 || k > 3) {
    throw Error(ErrorCode::InvalidArgument, "roles must permute {1,2,3}");
  }
  const T& li = lambdas[i - 1];
  const T& lj = lambdas[j - 1];
  const T& lk = lambdas[k - 1];
  const T lhs = li * lj / n * p.single(i) + lj * li / n * p.single(j) +
                lk * (li + lj - lk) / n * p.single(k) -
                (lk - li) * (lk - lj) * (p.pair(i, k) + p.pair(j, k));
  const T rhs = L2 - L * (li + lj);
  return T(lhs - rhs);
}

/// L^2(u,v) - L(u,v) (l_a + l_b), 1-based a and b.
template <class T>
T l2_minus_l(const SpectrumContext<T>& ctx, const LaplacianPairData<T>& pair,
             int a, int b) {
  return T(pair.L2 - pair.L * (ctx.lambda[a - 1] + ctx.lambda[b - 1]));
}

template <class T>
T lambda_excess(const SpectrumContext<T>& ctx) {
  return T(ctx.lambda[0] + ctx.lambda[1] - ctx.lambda[2]);
}

/// Whether one of the three sufficient conditions holds. Each needs
/// Delta_1, Delta_2, Delta_3 >= 0 in addition to its own clauses.
template <class T>
bool sufficient_case_holds(const SpectrumContext<T>& ctx,
                         const LaplacianPairData<T>& pair,
                         const DeltaProfile<T>& p, SufficientCase which) {
  if (sign(p.delta1) < 0 || sign(p.delta2) < 0 || sign(p.delta3) < 0) {
    return false;
  }
  const bool excess_ok = sign(lambda_excess(ctx)) >= 0;
  switch (which) {
    case SufficientCase::I:
      return sign(l2_minus_l(ctx, pair, 2, 3)) >= 0 && sign(p.delta12) >= 0;
    case SufficientCase::II:
      return sign(l2_minus_l(ctx, pair, 1, 2)) >= 0 && sign(p.delta13) <= 0 &&
             excess_ok;
    case SufficientCase::III:
      return sign(l2_minus_l(ctx, pair, 1, 3)) >= 0 && sign(p.delta23) >= 0 &&
             excess_ok;
  }
  return false;
}

/// First satisfied case in the order (i), (ii), (iii); empty if none.
template <class T>
std::optional<SufficientCase> sufficient_case_check(const SpectrumContext<T>& ctx,
                                                const LaplacianPairData<T>& pair,
                                                const DeltaProfile<T>& p) {
  for (SufficientCase c : {SufficientCase::I, SufficientCase::II, SufficientCase::III}) {
    if (sufficient_case_holds(ctx, pair, p, c)) return c;
  }
  return std::nullopt;
}

template <class T>
struct DistanceVerdict {
  int distance = 0;
  LaplacianPairData<T> pair;
  DeltaProfile<T> profile;
  // L^2 - L(l_a + l_b) for (a,b) = (2,3), (1,2), (1,3).
  T l2_minus_l_23;
  T l2_minus_l_12;
  T l2_minus_l_13;
  std::optional<SufficientCase> fired;
  // The case the known proof uses at this distance, and whether it holds.
  SufficientCase expected = SufficientCase::I;
  bool expected_holds = false;
  // Closed form and per-distance form gave identical profiles.
  bool forms_agree = false;
};

enum class VerdictStatus { Certified, NotCertified };

std::string_view to_string(VerdictStatus s) noexcept;

template <class T>
struct MnhdVerdict {
  VerdictStatus status = VerdictStatus::NotCertified;
  std::array<T, 3> lambda;
  T lambda_excess;  // l1 + l2 - l3
  std::vector<DistanceVerdict<T>> per_distance;
  // Points where a non-strict inequality is met with equality.
  std::vector<std::string> notes;

  bool certified() const { return status == VerdictStatus::Certified; }
};

/// Evaluates one distance class of a diameter-3 distance-regular graph.
template <class T>
DistanceVerdict<T> evaluate_distance(const SpectrumContext<T>& ctx,
                                     const DrgNumbers<T>& num, int dist,
                                     SufficientCase expected) {
  DistanceVerdict<T> v;
  v.distance = dist;
  v.pair = drg_pair_data(ctx.degree, num, dist);
  v.profile = delta_closed_form(ctx, v.pair);
  v.forms_agree = (v.profile == delta_drg(ctx, num, dist));
  v.l2_minus_l_23 = l2_minus_l(ctx, v.pair, 2, 3);
  v.l2_minus_l_12 = l2_minus_l(ctx, v.pair, 1, 2);
  v.l2_minus_l_13 = l2_minus_l(ctx, v.pair, 1, 3);
  v.fired = sufficient_case_check(ctx, v.pair, v.profile);
  v.expected = expected;
  v.expected_holds = sufficient_case_holds(ctx, v.pair, v.profile, expected);
  return v;
}

template <class T>
MnhdVerdict<T> assemble_verdict(const SpectrumContext<T>& ctx,
                                std::vector<DistanceVerdict<T>> per_distance) {
  MnhdVerdict<T> verdict;
  verdict.lambda = ctx.lambda;
  verdict.lambda_excess = lambda_excess(ctx);
  verdict.per_distance = std::move(per_distance);
  bool all = true;
  for (const auto& v : verdict.per_distance) all = all && v.fired.has_value();
  verdict.status = all ? VerdictStatus::Certified : VerdictStatus::NotCertified;
  return verdict;
}

/// Certification for classical parameters (3, b, alpha, beta). Throws
/// InfeasibleParams or WrongDiameter.
MnhdVerdict<Rational> certify_classical(const ClassicalParams& params);

/// The case the b-dependent proof path uses at each distance.
SufficientCase expected_classical_case(const ClassicalParams& params, int dist);

}  // namespace mnhd

#endif  // MNHD_MNHD_ANALYSIS_HPP
