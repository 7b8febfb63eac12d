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

#ifndef MNHD_QUADRATIC_HPP
#define MNHD_QUADRATIC_HPP

#include <string>

#include "mnhd/rational.hpp"

namespace mnhd {

/// a + c * sqrt(r) with rational a, c and square-free integer r >= 2, or a
/// plain rational (c = 0, r = 0). Arithmetic between two irrational values
/// with different radicands throws Error(MixedRadicand).
class QuadraticNumber {
 public:
  QuadraticNumber() = default;
  QuadraticNumber(long value) : a_(value) {}  // NOLINT(google-explicit-constructor)
  QuadraticNumber(const Rational& value) : a_(value) { a_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  QuadraticNumber(Rational a, Rational c, const Integer& radicand);

  /// sqrt(value) for a non-negative integer, with the square part pulled out.
  static QuadraticNumber sqrt(const Integer& value);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coefficient() const { return c_; }
  const Integer& radicand() const { return r_; }
  bool is_rational() const { return sgn(c_) == 0; }

  double to_double() const;
  /// "p/q" for rationals, otherwise "p/q + p/q*sqrt(r)".
  std::string to_string() const;

  QuadraticNumber operator-() const;
  QuadraticNumber& operator+=(const QuadraticNumber& o);
  QuadraticNumber& operator-=(const QuadraticNumber& o);
  QuadraticNumber& operator*=(const QuadraticNumber& o);
  QuadraticNumber& operator/=(const QuadraticNumber& o);

  friend QuadraticNumber operator+(QuadraticNumber x, const QuadraticNumber& y) { return x += y; }
  friend QuadraticNumber operator-(QuadraticNumber x, const QuadraticNumber& y) { return x -= y; }
  friend QuadraticNumber operator*(QuadraticNumber x, const QuadraticNumber& y) { return x *= y; }
  friend QuadraticNumber operator/(QuadraticNumber x, const QuadraticNumber& y) { return x /= y; }

  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.a_ == y.a_ && x.c_ == y.c_ && x.r_ == y.r_;
  }
  friend bool operator<(const QuadraticNumber& x, const QuadraticNumber& y);
  friend bool operator>(const QuadraticNumber& x, const QuadraticNumber& y) { return y < x; }
  friend bool operator<=(const QuadraticNumber& x, const QuadraticNumber& y) { return !(y < x); }
  friend bool operator>=(const QuadraticNumber& x, const QuadraticNumber& y) { return !(x < y); }

 private:
  void normalize();
  // Arithmetic keeps an already square-free radicand; only c = 0 needs care.
  void collapse();
  const Integer& common_radicand(const QuadraticNumber& o) const;

  Rational a_ = 0;
  Rational c_ = 0;
  Integer r_ = 0;
};

/// Exact sign: -1, 0 or 1.
int sign(const QuadraticNumber& x);

inline std::string to_exact_string(const Rational& x) { return to_fraction_string(x); }
inline std::string to_exact_string(const QuadraticNumber& x) { return x.to_string(); }
inline double to_double(const Rational& x) { return x.get_d(); }
inline double to_double(const QuadraticNumber& x) { return x.to_double(); }

}  // namespace mnhd

#endif  // MNHD_QUADRATIC_HPP
