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

#include <cmath>
#include <random>

#include "fixtures.hpp"
#include "mnhd/error.hpp"
#include "mnhd/quadratic.hpp"
#include "mnhd/rational.hpp"

namespace mnhd {
namespace {

TEST(Rational, ParsesFractionsAndIntegers) {
  EXPECT_EQ(parse_rational("3/4"), Rational(3) / 4);
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3) / 2);
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-3"), Rational(-3));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "1/0", "a", "1/", "/2", " 1", "1.5", "1/2/3", "4/-2"}) {
    EXPECT_THROW(parse_rational(bad), Error) << bad;
  }
}

TEST(Rational, FractionStringIsCanonical) {
  EXPECT_EQ(to_fraction_string(Rational(3)), "3/1");
  EXPECT_EQ(to_fraction_string(Rational(-2) / 6), "-1/3");
  EXPECT_EQ(to_fraction_string(Rational(0)), "0/1");
  EXPECT_TRUE(is_integer(Rational(8) / 4));
  EXPECT_FALSE(is_integer(Rational(1) / 4));
  EXPECT_EQ(power(Rational(-2), 3), Rational(-8));
  EXPECT_EQ(power(Rational(5), 0), Rational(1));
}

TEST(Rational, FractionStringRoundTrips) {
  std::mt19937_64 rng(testing::kSeed);
  for (int i = 0; i < 200; ++i) {
    const Rational x = testing::random_rational(rng, 1000, 97);
    EXPECT_EQ(parse_rational(to_fraction_string(x)), x);
  }
}

TEST(Quadratic, SqrtExtractsSquareFactors) {
  const QuadraticNumber s20 = QuadraticNumber::sqrt(20);
  EXPECT_EQ(s20.surd_coefficient(), Rational(2));
  EXPECT_EQ(s20.radicand(), Integer(5));
  EXPECT_TRUE(QuadraticNumber::sqrt(16).is_rational());
  EXPECT_EQ(QuadraticNumber::sqrt(16), QuadraticNumber(4));
  EXPECT_EQ(QuadraticNumber::sqrt(0), QuadraticNumber(0));
  EXPECT_THROW(QuadraticNumber::sqrt(-1), Error);
}

TEST(Quadratic, FieldArithmetic) {
  const QuadraticNumber s5 = QuadraticNumber::sqrt(5);
  const QuadraticNumber x = QuadraticNumber(5) - s5;
  const QuadraticNumber y = QuadraticNumber(5) + s5;
  EXPECT_EQ(x * y, QuadraticNumber(20));
  EXPECT_EQ(x + y, QuadraticNumber(10));
  EXPECT_EQ((x / y) * y, x);
  EXPECT_EQ(s5 * s5, QuadraticNumber(5));
  EXPECT_TRUE((s5 * s5).is_rational());
  EXPECT_EQ(-x, s5 - QuadraticNumber(5));
  EXPECT_THROW(x / (s5 - s5), Error);
  EXPECT_EQ(x.to_string(), "5/1 + -1/1*sqrt(5)");
}

TEST(Quadratic, MixedRadicandsRejected) {
  try {
    (void)(QuadraticNumber::sqrt(2) + QuadraticNumber::sqrt(3));
    FAIL() << "expected MixedRadicand";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MixedRadicand);
  }
  EXPECT_NO_THROW((void)(QuadraticNumber::sqrt(2) * QuadraticNumber(3)));
}

TEST(Quadratic, ExactSignNearZero) {
  // Convergents of sqrt(2): 577/408 lies above it, 1393/985 below, both
  // within 2.2e-6.
  const QuadraticNumber below = QuadraticNumber::sqrt(2) - QuadraticNumber(Rational(577) / 408);
  EXPECT_EQ(sign(below), -1);
  const QuadraticNumber above = QuadraticNumber::sqrt(2) - QuadraticNumber(Rational(1393) / 985);
  EXPECT_EQ(sign(above), 1);
  EXPECT_EQ(sign(QuadraticNumber(0)), 0);
  EXPECT_LT(QuadraticNumber(2), QuadraticNumber::sqrt(5));
  EXPECT_GT(QuadraticNumber(3), QuadraticNumber::sqrt(5));
}

TEST(Quadratic, SignAgreesWithDoubleAwayFromZero) {
  std::mt19937_64 rng(testing::kSeed + 1);
  std::uniform_int_distribution<long> rad(2, 50);
  int checked = 0;
  for (int i = 0; i < 500; ++i) {
    const QuadraticNumber x(testing::random_rational(rng, 50, 7),
                            testing::random_rational(rng, 50, 7), rad(rng));
    const double v = x.to_double();
    if (std::abs(v) < 1e-6) continue;
    EXPECT_EQ(sign(x), v > 0 ? 1 : -1) << x.to_string();
    ++checked;
  }
  EXPECT_GT(checked, 400);
}

TEST(Quadratic, RingLawsOnRandomValues) {
  std::mt19937_64 rng(testing::kSeed + 2);
  auto draw = [&] {
    return QuadraticNumber(testing::random_rational(rng, 30, 6),
                           testing::random_rational(rng, 30, 6), 7);
  };
  for (int i = 0; i < 200; ++i) {
    const auto a = draw();
    const auto b = draw();
    const auto c = draw();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    if (sign(b) != 0) EXPECT_EQ(a / b * b, a);
  }
}

}  // namespace
}  // namespace mnhd
