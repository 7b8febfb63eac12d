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

#include "mnhd/mnhd_analysis.hpp"

namespace mnhd {

std::string_view to_string(SufficientCase c) noexcept {
  switch (c) {
    case SufficientCase::I: return "i";
    case SufficientCase::II: return "ii";
    case SufficientCase::III: return "iii";
  }
  return "?";
}

std::string_view to_string(VerdictStatus s) noexcept {
  return s == VerdictStatus::Certified ? "certified" : "not_certified";
}

namespace {

void require_diameter3(const IntersectionArray& array) {
  if (array.diameter() != 3) {
    throw Error(ErrorCode::WrongDiameter,
                "need a diameter-3 array, got " + to_string(array));
  }
}

}  // namespace

Rational l2_entry(const IntersectionArray& array, int dist) {
  require_diameter3(array);
  return l2_entry(array.degree, array.a_at(1), array.c_at(2), dist);
}

DrgNumbers<Rational> drg_numbers(const IntersectionArray& array) {
  return {array.a_at(1), array.b_at(1), array.c_at(2)};
}

DeltaProfile<Rational> delta_drg(const SpectrumContext<Rational>& ctx,
                                 const IntersectionArray& array, int dist) {
  return delta_drg(ctx, drg_numbers(array), dist);
}

Rational delta12_distance1(const SpectrumContext<Rational>& ctx,
                           const IntersectionArray& array) {
  return delta12_distance1(ctx, array.b_at(1));
}

SufficientCase expected_classical_case(const ClassicalParams& params, int dist) {
  switch (dist) {
    case 1: return SufficientCase::I;
    case 2:
      if (params.b <= -2) return SufficientCase::I;
      return params.beta >= 1 + (2 + params.b) * params.alpha
                 ? SufficientCase::I
                 : SufficientCase::II;
    case 3: return SufficientCase::III;
  }
  throw Error(ErrorCode::BadDistance, "distance " + std::to_string(dist));
}

MnhdVerdict<Rational> certify_classical(const ClassicalParams& params) {
  if (params.diameter != 3) {
    throw Error(ErrorCode::WrongDiameter,
                "classical certification needs D=3, got D=" +
                    std::to_string(params.diameter));
  }
  const IntersectionArray array = intersection_array(params);
  const EigenvalueTriple triple = laplacian_eigenvalues_sorted(params);
  const auto ctx = make_context(array.degree, array.vertex_count, triple);
  const DrgNumbers<Rational> num = drg_numbers(array);

  std::vector<DistanceVerdict<Rational>> rows;
  for (int dist = 1; dist <= 3; ++dist) {
    rows.push_back(
        evaluate_distance(ctx, num, dist, expected_classical_case(params, dist)));
  }
  MnhdVerdict<Rational> verdict = assemble_verdict(ctx, std::move(rows));

  const auto& d2 = verdict.per_distance[1];
  if (params.b >= 1 && params.beta == 1 + (2 + params.b) * params.alpha) {
    verdict.notes.emplace_back("distance 2: beta equals 1+(2+b)alpha");
  }
  if (d2.expected == SufficientCase::II && sgn(d2.profile.delta13) == 0) {
    verdict.notes.emplace_back("distance 2: delta13 = 0 on the case ii path");
  }
  if (sgn(verdict.lambda_excess) == 0) {
    verdict.notes.emplace_back("lambda1 + lambda2 - lambda3 = 0");
  }
  return verdict;
}

}  // namespace mnhd
