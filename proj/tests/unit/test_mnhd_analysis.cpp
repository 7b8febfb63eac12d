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

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "mnhd/error.hpp"
#include "mnhd/graph.hpp"
#include "mnhd/mnhd_analysis.hpp"
#include "mnhd/spectra.hpp"

namespace mnhd {
namespace {

using Q = Rational;

ClassicalParams params(long b, Rational alpha, Rational beta) {
  ClassicalParams p;
  p.b = b;
  p.alpha = std::move(alpha);
  p.beta = std::move(beta);
  return p;
}

SpectrumContext<Q> context_of(const ClassicalParams& p) {
  const IntersectionArray a = intersection_array(p);
  return make_context(a.degree, a.vertex_count, laplacian_eigenvalues_sorted(p));
}

Q frac(long p, long q) { return Q(p) / q; }

// Every feasible diameter-3 point of a small grid.
std::vector<ClassicalParams> feasible_points(long k_bound, long beta_bound) {
  std::vector<ClassicalParams> out;
  for (long b : {-5, -4, -3, -2, 1, 2, 3, 4, 5}) {
    const long q = 1 + b + b * b;
    for (long k = -k_bound; k <= k_bound; ++k) {
      for (long j = 1; j <= beta_bound * q; ++j) {
        const ClassicalParams p = params(b, Q(k) / (1 + b), Q(j) / q);
        if (validate(p).feasible) out.push_back(p);
      }
    }
  }
  return out;
}

TEST(Context, LagrangeConstants) {
  const auto c = make_context<Q>(3, 8, {2, 4, 6});
  EXPECT_EQ(c.C, (std::array<Q, 3>{frac(1, 8), frac(-1, 4), frac(1, 8)}));
  const auto j = make_context<Q>(9, 20, {6, 10, 12});
  EXPECT_EQ(j.C, (std::array<Q, 3>{frac(1, 24), frac(-1, 8), frac(1, 12)}));
}

TEST(Context, Errors) {
  try {
    make_context<Q>(3, 8, {2, 2, 6});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateSpectrum);
  }
  EXPECT_THROW(make_context<Q>(3, 8, {4, 2, 6}), Error);
  EXPECT_THROW(make_context<Q>(3, 8, {0, 2, 6}), Error);
}

TEST(L2Entry, CubeValues) {
  const IntersectionArray q3 = intersection_array(params(1, 0, 1));
  EXPECT_EQ(l2_entry(q3, 0), 12);
  EXPECT_EQ(l2_entry(q3, 1), -6);
  EXPECT_EQ(l2_entry(q3, 2), 2);
  EXPECT_EQ(l2_entry(q3, 3), 0);
  for (int bad : {-1, 4}) {
    try {
      l2_entry(q3, bad);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::BadDistance);
    }
  }
}

TEST(L2Entry, MatchesLiteralSquareOnFixtures) {
  for (const auto& [g, p] : {std::pair{hypercube(3), params(1, 0, 1)},
                             std::pair{johnson(6, 3), params(1, 1, 3)}}) {
    const IntersectionArray array = intersection_array(p);
    const DistanceMatrix dist(g);
    const std::size_t n = g.vertex_count();
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        long literal = 0;
        for (Vertex w = 0; w < n; ++w) {
          const long luw = u == w ? static_cast<long>(g.degree(u)) : -long{g.adjacent(u, w)};
          const long lwv = w == v ? static_cast<long>(g.degree(v)) : -long{g.adjacent(w, v)};
          literal += luw * lwv;
        }
        ASSERT_EQ(l2_entry(array, static_cast<int>(*dist.at(u, v))), literal);
      }
    }
  }
}

TEST(DeltaClosedForm, CubeExamples) {
  const auto ctx = context_of(params(1, 0, 1));
  const auto d1 = delta_closed_form<Q>(ctx, {-1, -6});
  EXPECT_EQ(d1.delta1, frac(1, 4));
  const auto d3 = delta_closed_form<Q>(ctx, {0, 0});
  EXPECT_EQ(d3.delta2, 0);
  const auto self = delta_closed_form<Q>(ctx, {3, 12});
  EXPECT_EQ(self.delta1, ctx.C[0] * ctx.lambda[1] * ctx.lambda[2]);
}

// Profiles frozen from the exact pipeline; the projection oracle test
// below confirms them numerically on the literal graphs.
TEST(DeltaClosedForm, FrozenFixtureProfiles) {
  const auto cube = context_of(params(1, 0, 1));
  const std::array<DeltaProfile<Q>, 3> cube_expected{{
      {frac(1, 4), frac(1, 2), frac(1, 4), frac(3, 32), frac(1, 16), frac(1, 32)},
      {frac(1, 2), frac(1, 2), 0, 0, frac(-1, 16), frac(-1, 16)},
      {frac(3, 4), 0, frac(1, 4), frac(-9, 32), 0, frac(3, 32)},
  }};
  const auto j63 = context_of(params(1, 1, 3));
  const std::array<DeltaProfile<Q>, 3> j63_expected{{
      {frac(1, 6), frac(1, 2), frac(1, 3), frac(1, 20), frac(1, 24), frac(1, 40)},
      {frac(1, 3), frac(1, 2), frac(1, 6), frac(-1, 40), frac(-1, 24), frac(-1, 20)},
      {frac(1, 2), 0, frac(1, 2), frac(-9, 40), 0, frac(9, 40)},
  }};
  const auto cube_num = drg_numbers(intersection_array(params(1, 0, 1)));
  const auto j63_num = drg_numbers(intersection_array(params(1, 1, 3)));
  for (int k = 1; k <= 3; ++k) {
    EXPECT_EQ(delta_closed_form(cube, drg_pair_data(cube.degree, cube_num, k)), cube_expected[k - 1]);
    EXPECT_EQ(delta_closed_form(j63, drg_pair_data(j63.degree, j63_num, k)), j63_expected[k - 1]);
  }
}

TEST(DeltaClosedForm, MatchesProjectionsOnFixtures) {
  for (const auto& [g, p] : {std::pair{hypercube(3), params(1, 0, 1)},
                             std::pair{johnson(6, 3), params(1, 1, 3)}}) {
    const auto ctx = context_of(p);
    const IntersectionArray array = intersection_array(p);
    const auto decomp = eigendecompose(laplacian(g));
    const DistanceMatrix dist(g);
    for (int k = 1; k <= 3; ++k) {
      Vertex v = 0;
      while (*dist.at(0, v) != static_cast<std::size_t>(k)) ++v;
      const auto exact = delta_closed_form(ctx, drg_pair_data(ctx.degree, drg_numbers(array), k));
      const auto numeric = delta_from_projections(decomp, 0, v);
      for (int i = 1; i <= 3; ++i) {
        EXPECT_NEAR(exact.single(i).get_d(), numeric.single(i), 1e-9);
        for (int j = i + 1; j <= 3; ++j) {
          EXPECT_NEAR(exact.pair(i, j).get_d(), numeric.pair(i, j), 1e-9);
        }
      }
    }
  }
}

TEST(DeltaDrg, Examples) {
  const auto cube = context_of(params(1, 0, 1));
  const auto cube_array = intersection_array(params(1, 0, 1));
  EXPECT_EQ(delta_drg(cube, cube_array, 2).delta1, frac(1, 2));

  // C1 {(10-10)(12-10) + 9 - a1 - 1} with a1 = 4 for J(6,3).
  const auto j63 = context_of(params(1, 1, 3));
  const auto j63_array = intersection_array(params(1, 1, 3));
  EXPECT_EQ(j63_array.a_at(1), 4);
  EXPECT_EQ(delta_drg(j63, j63_array, 1).delta1, frac(1, 6));

  EXPECT_THROW(delta_drg(cube, cube_array, 0), Error);
  EXPECT_THROW(delta_drg(cube, cube_array, 4), Error);
}

TEST(DeltaDrg, EqualsClosedFormOnFeasiblePoints) {
  const auto points = feasible_points(8, 8);
  ASSERT_GE(points.size(), 50u);
  for (const auto& p : points) {
    const auto ctx = context_of(p);
    const auto array = intersection_array(p);
    for (int k = 1; k <= 3; ++k) {
      const LaplacianPairData<Q> pair{k == 1 ? Q(-1) : Q(0), l2_entry(array, k)};
      ASSERT_EQ(delta_drg(ctx, array, k), delta_closed_form(ctx, pair)) << to_string(p);
    }
  }
}

TEST(Delta12Distance1, MatchesClosedForm) {
  for (const auto& p : {params(1, 0, 1), params(1, 1, 3), params(-2, -3, 7)}) {
    const auto ctx = context_of(p);
    const auto array = intersection_array(p);
    EXPECT_EQ(delta12_distance1(ctx, array),
              delta_closed_form<Q>(ctx, {-1, l2_entry(array, 1)}).delta12)
        << to_string(p);
  }
}

TEST(IdentityResidual, Examples) {
  EXPECT_EQ(identity_residual<Q>({1, 2, 4}, 3, 10, -1, -6, {1, 2, 3}), 0);
  const std::array<std::array<int, 3>, 6> perms{{{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                                 {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
  for (const auto& roles : perms) {
    EXPECT_EQ(identity_residual<Q>({2, 4, 6}, 3, 8, 0, 2, roles), 0);
  }
  try {
    identity_residual<Q>({2, 2, 6}, 3, 8, 0, 2, {1, 2, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateSpectrum);
  }
  EXPECT_THROW(identity_residual<Q>({1, 2, 6}, 3, 8, 0, 2, {1, 1, 3}), Error);
}

TEST(IdentityResidual, ZeroOnRandomInputs) {
  std::mt19937_64 rng(testing::kSeed + 30);
  std::uniform_int_distribution<int> perm(0, 5);
  const std::array<std::array<int, 3>, 6> perms{{{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                                 {2, 3, 1}, {3, 1, 2}, {3, 2, 1}}};
  for (int i = 0; i < 1000; ++i) {
    const auto l = testing::random_distinct_triple(rng);
    Q n = testing::random_rational(rng, 50, 5);
    if (n == 0) n = 1;
    const Q d = testing::random_rational(rng, 30, 5);
    const Q L = testing::random_rational(rng, 10, 3);
    const Q L2 = testing::random_rational(rng, 60, 4);
    ASSERT_EQ(identity_residual(l, d, n, L, L2, perms[perm(rng)]), 0);
  }
}

TEST(IdentityResidual, HoldsInDoublesApproximately) {
  const double r = identity_residual<double>({1.5, 2.25, 7.0}, 4.0, 11.0, -1.0, -3.0, {2, 3, 1});
  EXPECT_NEAR(r, 0.0, 1e-10);
}

TEST(SufficientCase, CubeDistances) {
  const auto ctx = context_of(params(1, 0, 1));
  const LaplacianPairData<Q> d1{-1, -6};
  EXPECT_EQ(sufficient_case_check(ctx, d1, delta_closed_form(ctx, d1)), SufficientCase::I);
  const LaplacianPairData<Q> d3{0, 0};
  EXPECT_TRUE(sufficient_case_check(ctx, d3, delta_closed_form(ctx, d3)).has_value());

  auto broken = delta_closed_form(ctx, d1);
  broken.delta1 = -1;
  EXPECT_FALSE(sufficient_case_check(ctx, d1, broken).has_value());
}

TEST(SufficientCase, EachClauseMatters) {
  const auto ctx = context_of(params(1, 1, 3));
  const LaplacianPairData<Q> pair{0, 4};
  const auto base = delta_closed_form(ctx, pair);
  ASSERT_EQ(sufficient_case_check(ctx, pair, base), SufficientCase::II);
  auto p = base;
  p.delta13 = frac(1, 1000);
  EXPECT_FALSE(sufficient_case_holds(ctx, pair, p, SufficientCase::II));
  // A negative lambda excess rules out (ii) and (iii) alone.
  auto skewed = ctx;
  skewed.lambda = {1, 2, 30};
  EXPECT_FALSE(sufficient_case_holds(skewed, pair, base, SufficientCase::II));
  EXPECT_FALSE(sufficient_case_holds(skewed, pair, base, SufficientCase::III));
}

TEST(CertifyClassical, Examples) {
  const auto cube = certify_classical(params(1, 0, 1));
  EXPECT_TRUE(cube.certified());
  EXPECT_EQ(cube.per_distance[0].fired, SufficientCase::I);

  const auto her = certify_classical(params(-2, -3, 7));
  EXPECT_TRUE(her.certified());
  for (const auto& row : her.per_distance) EXPECT_TRUE(row.expected_holds);

  // beta = 3 below 1 + (2+b) alpha = 4: distance 2 goes through (ii).
  const auto j63 = certify_classical(params(1, 1, 3));
  EXPECT_TRUE(j63.certified());
  EXPECT_EQ(j63.per_distance[1].expected, SufficientCase::II);
  EXPECT_EQ(j63.per_distance[1].fired, SufficientCase::II);
  EXPECT_LE(j63.per_distance[1].profile.delta13, 0);
  EXPECT_EQ(j63.lambda_excess, 4);
}

TEST(CertifyClassical, ThresholdEqualityUsesCaseOne) {
  // b=1, alpha=1, beta=4 sits exactly on beta = 1 + (2+b) alpha.
  const auto v = certify_classical(params(1, 1, 4));
  EXPECT_TRUE(v.certified());
  EXPECT_EQ(v.per_distance[1].expected, SufficientCase::I);
  EXPECT_TRUE(v.per_distance[1].expected_holds);
  EXPECT_FALSE(v.notes.empty());
}

TEST(CertifyClassical, Errors) {
  try {
    certify_classical(params(0, 0, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InfeasibleParams);
  }
  ClassicalParams p = params(1, 0, 1);
  p.diameter = 4;
  try {
    certify_classical(p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongDiameter);
  }
}

// The properties the certification rests on, over every feasible point of
// a moderate grid: lambda excess, the distance-1 L^2 condition, Delta
// positivity, certification itself and the expected proof path.
TEST(CertifyClassical, InvariantsOnFeasibleGrid) {
  const auto points = feasible_points(12, 12);
  ASSERT_GT(points.size(), 100u);
  for (const auto& p : points) {
    const auto v = certify_classical(p);
    ASSERT_TRUE(v.certified()) << to_string(p);
    ASSERT_GE(v.lambda_excess, 0) << to_string(p);
    ASSERT_GE(v.per_distance[0].l2_minus_l_23, 0) << to_string(p);
    for (const auto& row : v.per_distance) {
      for (int i = 1; i <= 3; ++i) ASSERT_GE(row.profile.single(i), 0) << to_string(p);
      ASSERT_TRUE(row.forms_agree);
      ASSERT_TRUE(row.expected_holds) << to_string(p) << " distance " << row.distance;
    }
  }
}

}  // namespace
}  // namespace mnhd
