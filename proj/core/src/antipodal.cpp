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

#include "mnhd/antipodal.hpp"

#include <vector>

namespace mnhd {

namespace {

using Q = QuadraticNumber;

struct AntipodalSetup {
  SpectrumContext<Q> ctx;
  DrgNumbers<Q> num;
};

AntipodalSetup setup(const AntipodalParams& p) {
  const IntersectionArray array = antipodal_array(p);
  const auto lambdas = antipodal_eigenvalues(p);
  const Q d(p.d);
  const Q n(array.vertex_count);
  return {make_context(d, n, lambdas),
          {Q(array.a_at(1)), Q(array.b_at(1)), Q(array.c_at(2))}};
}

}  // namespace

FeasibilityReport validate(const AntipodalParams& p) {
  FeasibilityReport report;
  auto fail = [&](std::string id, std::string detail) {
    report.violations.push_back({std::move(id), std::move(detail)});
  };
  if (p.d < 1) fail("d_nonpositive", "d=" + std::to_string(p.d));
  if (p.gamma_c2 < 1) fail("gamma_nonpositive", "gamma=" + std::to_string(p.gamma_c2));
  if (p.m < 1) fail("m_nonpositive", "m=" + std::to_string(p.m));
  if (!report.violations.empty()) {
    report.feasible = false;
    return report;
  }
  const long a1 = p.d - p.m * p.gamma_c2 - 1;
  const long a2 = p.d - p.gamma_c2 - 1;
  if (a1 < 0) fail("a1_negative", "a1=" + std::to_string(a1));
  if (a2 < 0) fail("a2_negative", "a2=" + std::to_string(a2));
  const long slack = 2 * p.d - 2 - p.gamma_c2 - p.m * p.gamma_c2;
  if (slack < 0) {
    fail("lambda_excess_negative", "2d-2-gamma-m*gamma=" + std::to_string(slack));
  }
  report.feasible = report.violations.empty();
  return report;
}

IntersectionArray antipodal_array(const AntipodalParams& p) {
  const FeasibilityReport report = validate(p);
  if (!report.feasible) {
    std::string what = to_string(p) + " violates";
    for (const auto& v : report.violations) what += " " + v.id;
    throw Error(ErrorCode::InfeasibleParams, what);
  }
  return IntersectionArray::from_lists(
      {Rational(p.d), Rational(p.m * p.gamma_c2), Rational(1)},
      {Rational(1), Rational(p.gamma_c2), Rational(p.d)});
}

Integer antipodal_vertex_count(const AntipodalParams& p) {
  return Integer(1 + p.d + p.m + p.d * p.m);
}

Integer antipodal_m_squared(const AntipodalParams& p) {
  const Integer x = Integer(p.d) - p.gamma_c2 - p.m * p.gamma_c2 - 1;
  return 4 * Integer(p.d) + x * x;
}

std::array<QuadraticNumber, 3> antipodal_eigenvalues(const AntipodalParams& p) {
  const Q M = Q::sqrt(antipodal_m_squared(p));
  const Q s(Rational(1 - p.d + p.gamma_c2 + p.m * p.gamma_c2) / 2);
  const Q half(Rational(1) / 2);
  const Q d(p.d);
  std::array<Q, 3> l{d + s - half * M, Q(1 + p.d), d + s + half * M};
  if (!(sign(l[0]) > 0 && l[0] < l[1] && l[1] < l[2])) {
    throw Error(ErrorCode::OrderingViolation,
                to_string(p) + " gives " + l[0].to_string() + ", " +
                    l[1].to_string() + ", " + l[2].to_string());
  }
  return l;
}

AntipodalIdentities antipodal_identities(const AntipodalParams& p) {
  const AntipodalSetup s = setup(p);
  const auto& ctx = s.ctx;
  const Integer d = p.d;
  const Integer g = p.gamma_c2;
  const Integer m = p.m;
  const Integer M2 = antipodal_m_squared(p);

  AntipodalIdentities out;
  out.excess_square_difference =
      (1 + d) * (1 + d) - M2 == g * (1 + m) * (2 * d - 2 - g - m * g);
  const Integer top = 1 + d + g + m * g;
  out.distance3_square_difference = top * top - M2 == 4 * d * (1 + m) * g;

  const auto p1 = delta_drg(ctx, s.num, 1);
  const auto p2 = delta_drg(ctx, s.num, 2);
  const auto p3 = delta_drg(ctx, s.num, 3);
  out.distance1_delta1_ratio = p1.delta1 / ctx.C[0] == Q(p.m * p.gamma_c2);
  out.distance2_delta2_ratio = p2.delta2 / ctx.C[1] == Q(-p.gamma_c2);
  out.distance1_delta12_bracket =
      detail::cross_bracket_distance1(ctx.degree, ctx.vertex_count,
                                      ctx.lambda[2], s.num.b1) ==
      -ctx.lambda[2] * s.num.b1;
  out.distance3_delta2_zero = sign(p3.delta2) == 0;
  out.distance3_delta13_zero = sign(p3.delta13) == 0;
  return out;
}

MnhdVerdict<QuadraticNumber> certify_antipodal(const AntipodalParams& p) {
  const AntipodalSetup s = setup(p);
  std::vector<DistanceVerdict<Q>> rows;
  rows.push_back(evaluate_distance(s.ctx, s.num, 1, SufficientCase::I));
  rows.push_back(evaluate_distance(s.ctx, s.num, 2, SufficientCase::II));
  rows.push_back(evaluate_distance(s.ctx, s.num, 3, SufficientCase::II));
  MnhdVerdict<Q> verdict = assemble_verdict(s.ctx, std::move(rows));

  const AntipodalIdentities ids = antipodal_identities(p);
  auto check = [&](bool ok, const char* name) {
    if (!ok) {
      verdict.notes.emplace_back(std::string("identity failed: ") + name);
      verdict.status = VerdictStatus::NotCertified;
    }
  };
  check(ids.excess_square_difference, "excess_square_difference");
  check(ids.distance3_square_difference, "distance3_square_difference");
  check(ids.distance1_delta1_ratio, "distance1_delta1_ratio");
  check(ids.distance2_delta2_ratio, "distance2_delta2_ratio");
  check(ids.distance1_delta12_bracket, "distance1_delta12_bracket");
  check(ids.distance3_delta2_zero, "distance3_delta2_zero");
  check(ids.distance3_delta13_zero, "distance3_delta13_zero");
  if (sign(verdict.lambda_excess) == 0) {
    verdict.notes.emplace_back("lambda1 + lambda2 - lambda3 = 0");
  }
  return verdict;
}

std::string to_string(const AntipodalParams& p) {
  return "{" + std::to_string(p.d) + "," + std::to_string(p.m * p.gamma_c2) +
         ",1;1," + std::to_string(p.gamma_c2) + "," + std::to_string(p.d) + "}";
}

}  // namespace mnhd
