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

#include "mnhd/rational.hpp"

#include <cctype>

#include "mnhd/error.hpp"

namespace mnhd {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InfeasibleParams: return "InfeasibleParams";
    case ErrorCode::UnexpectedOrdering: return "UnexpectedOrdering";
    case ErrorCode::WrongDiameter: return "WrongDiameter";
    case ErrorCode::DegenerateSpectrum: return "DegenerateSpectrum";
    case ErrorCode::BadDistance: return "BadDistance";
    case ErrorCode::SizeLimit: return "SizeLimit";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::NegativeTime: return "NegativeTime";
    case ErrorCode::SameVertex: return "SameVertex";
    case ErrorCode::WrongSpectrumSize: return "WrongSpectrumSize";
    case ErrorCode::OrderingViolation: return "OrderingViolation";
    case ErrorCode::MixedRadicand: return "MixedRadicand";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

bool is_signed_digits(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  std::string text(s.front() == '+' ? s.substr(1) : s);
  return Integer(text, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_signed_digits(num)) {
    throw Error(ErrorCode::InvalidArgument,
                "not a fraction: '" + std::string(text) + "'");
  }
  Integer p = parse_integer(num);
  Integer q = 1;
  if (slash != std::string_view::npos) {
    std::string_view den = text.substr(slash + 1);
    if (!is_signed_digits(den) || den.front() == '-' || den.front() == '+') {
      throw Error(ErrorCode::InvalidArgument,
                  "bad denominator in '" + std::string(text) + "'");
    }
    q = parse_integer(den);
    if (q == 0) {
      throw Error(ErrorCode::InvalidArgument,
                  "zero denominator in '" + std::string(text) + "'");
    }
  }
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

int sign(const Rational& value) { return sgn(value); }

Rational power(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace mnhd
