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

#include "mnhd/quadratic.hpp"

#include <cmath>

#include "mnhd/error.hpp"

namespace mnhd {

namespace {

// value = square^2 * free with free square-free.
void split_square(const Integer& value, Integer& square, Integer& free) {
  square = 1;
  free = value;
  for (Integer p = 2; p * p <= free; ++p) {
    const Integer pp = p * p;
    while (free % pp == 0) {
      free /= pp;
      square *= p;
    }
  }
}

}  // namespace

QuadraticNumber::QuadraticNumber(Rational a, Rational c, const Integer& radicand)
    : a_(std::move(a)), c_(std::move(c)), r_(radicand) {
  a_.canonicalize();
  c_.canonicalize();
  if (sgn(r_) < 0) {
    throw Error(ErrorCode::InvalidArgument,
                "negative radicand " + r_.get_str());
  }
  normalize();
}

QuadraticNumber QuadraticNumber::sqrt(const Integer& value) {
  return QuadraticNumber(0, 1, value);
}

void QuadraticNumber::normalize() {
  if (sgn(c_) == 0 || sgn(r_) == 0) {
    c_ = 0;
    r_ = 0;
    return;
  }
  Integer square;
  Integer free;
  split_square(r_, square, free);
  c_ *= square;
  if (free == 1) {
    a_ += c_;
    c_ = 0;
    r_ = 0;
  } else {
    r_ = free;
  }
}

void QuadraticNumber::collapse() {
  if (sgn(c_) == 0) r_ = 0;
}

const Integer& QuadraticNumber::common_radicand(const QuadraticNumber& o) const {
  if (is_rational()) return o.r_;
  if (o.is_rational() || r_ == o.r_) return r_;
  throw Error(ErrorCode::MixedRadicand,
              "sqrt(" + r_.get_str() + ") with sqrt(" + o.r_.get_str() + ")");
}

double QuadraticNumber::to_double() const {
  if (is_rational()) return a_.get_d();
  return a_.get_d() + c_.get_d() * std::sqrt(r_.get_d());
}

std::string QuadraticNumber::to_string() const {
  if (is_rational()) return to_fraction_string(a_);
  return to_fraction_string(a_) + " + " + to_fraction_string(c_) + "*sqrt(" +
         r_.get_str() + ")";
}

QuadraticNumber QuadraticNumber::operator-() const {
  QuadraticNumber x = *this;
  x.a_ = -x.a_;
  x.c_ = -x.c_;
  return x;
}

QuadraticNumber& QuadraticNumber::operator+=(const QuadraticNumber& o) {
  const Integer r = common_radicand(o);
  a_ += o.a_;
  c_ += o.c_;
  r_ = r;
  collapse();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator-=(const QuadraticNumber& o) {
  return *this += -o;
}

QuadraticNumber& QuadraticNumber::operator*=(const QuadraticNumber& o) {
  const Integer r = common_radicand(o);
  const Rational a = a_ * o.a_ + c_ * o.c_ * r;
  const Rational c = a_ * o.c_ + c_ * o.a_;
  a_ = a;
  c_ = c;
  r_ = r;
  collapse();
  return *this;
}

QuadraticNumber& QuadraticNumber::operator/=(const QuadraticNumber& o) {
  common_radicand(o);
  // (a + c s)^{-1} = (a - c s) / (a^2 - c^2 r); the norm vanishes only at 0
  // because r is square-free and not 1.
  const Rational norm = o.a_ * o.a_ - o.c_ * o.c_ * o.r_;
  if (sgn(norm) == 0) {
    throw Error(ErrorCode::DivisionByZero, "division by " + o.to_string());
  }
  QuadraticNumber conj = o;
  conj.c_ = -conj.c_;
  *this *= conj;
  a_ /= norm;
  c_ /= norm;
  collapse();
  return *this;
}

int sign(const QuadraticNumber& x) {
  const int sa = sgn(x.rational_part());
  const int sc = sgn(x.surd_coefficient());
  if (sc == 0) return sa;
  if (sa == 0) return sc;
  if (sa == sc) return sa;
  // Opposite signs: compare a^2 with c^2 r.
  const Rational a2 = x.rational_part() * x.rational_part();
  const Rational c2r = x.surd_coefficient() * x.surd_coefficient() * x.radicand();
  const int cmp = sgn(a2 - c2r);
  return cmp == 0 ? 0 : (cmp > 0 ? sa : sc);
}

bool operator<(const QuadraticNumber& x, const QuadraticNumber& y) {
  return sign(x - y) < 0;
}

}  // namespace mnhd
