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

#ifndef MNHD_RATIONAL_HPP
#define MNHD_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mnhd {

using Integer = mpz_class;
using Rational = mpq_class;

/// Parses "p/q" or a plain integer ("-3"). Whitespace is not accepted.
/// Throws Error(InvalidArgument) on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form with q >= 1 and gcd(p, q) = 1, also for integers.
std::string to_fraction_string(const Rational& value);

bool is_integer(const Rational& value);

int sign(const Rational& value);
inline int sign(double value) { return (value > 0) - (value < 0); }

inline Rational rational(long value) { return Rational(value); }

// b^k for integer b and k >= 0.
Rational power(const Rational& base, unsigned exponent);

}  // namespace mnhd

#endif  // MNHD_RATIONAL_HPP
