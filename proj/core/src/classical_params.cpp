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

#include "mnhd/classical_params.hpp"

#include <algorithm>
#include <sstream>

#include "mnhd/error.hpp"

namespace mnhd {

namespace {

std::string short_string(const Rational& v) {
  return is_integer(v) ? v.get_num().get_str() : to_fraction_string(v);
}

void check_diameter(const ClassicalParams& params) {
  if (params.diameter < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "diameter must be positive, got " +
                    std::to_string(params.diameter));
  }
}

}  // namespace

IntersectionArray IntersectionArray::from_lists(std::vector<Rational> b_list,
                                                std::vector<Rational> c_list) {
  if (b_list.empty() || b_list.size() != c_list.size()) {
    throw Error(ErrorCode::InvalidArgument,
                "intersection array needs D >= 1 entries on each side");
  }
  IntersectionArray array;
  array.b_list = std::move(b_list);
  array.c_list = std::move(c_list);
  array.degree = array.b_list.front();
  const int D = array.diameter();
  array.a_list.reserve(D + 1);
  for (int i = 0; i <= D; ++i) {
    array.a_list.push_back(array.degree - array.b_at(i) - array.c_at(i));
  }
  array.vertex_count = mnhd::vertex_count(array);
  return array;
}

Rational IntersectionArray::b_at(int i) const {
  return i < diameter() ? b_list.at(i) : Rational(0);
}

Rational IntersectionArray::c_at(int i) const {
  return i == 0 ? Rational(0) : c_list.at(i - 1);
}

Rational IntersectionArray::a_at(int i) const { return a_list.at(i); }

bool FeasibilityReport::has(std::string_view id) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.id == id; });
}

Rational gaussian_binomial(unsigned j, long b) {
  Rational sum = 0;
  Rational term = 1;
  for (unsigned i = 0; i < j; ++i) {
    sum += term;
    term *= b;
  }
  return sum;
}

IntersectionArray raw_intersection_array(const ClassicalParams& params) {
  check_diameter(params);
  const unsigned D = static_cast<unsigned>(params.diameter);
  const Rational top = gaussian_binomial(D, params.b);

  std::vector<Rational> bs;
  std::vector<Rational> cs;
  for (unsigned i = 0; i < D; ++i) {
    const Rational gi = gaussian_binomial(i, params.b);
    bs.emplace_back((top - gi) * (params.beta - params.alpha * gi));
  }
  for (unsigned i = 1; i <= D; ++i) {
    const Rational gi = gaussian_binomial(i, params.b);
    const Rational gprev = gaussian_binomial(i - 1, params.b);
    cs.emplace_back(gi * (1 + params.alpha * gprev));
  }

  IntersectionArray array;
  array.b_list = std::move(bs);
  array.c_list = std::move(cs);
  array.degree = array.b_list.front();
  for (unsigned i = 0; i <= D; ++i) {
    const int k = static_cast<int>(i);
    array.a_list.push_back(array.degree - array.b_at(k) - array.c_at(k));
  }
  const bool any_zero_c =
      std::any_of(array.c_list.begin(), array.c_list.end(),
                  [](const Rational& c) { return sgn(c) == 0; });
  array.vertex_count = any_zero_c ? Rational(0) : mnhd::vertex_count(array);
  return array;
}

Rational vertex_count(const IntersectionArray& array) {
  Rational n = 1;
  Rational layer = 1;
  for (int i = 0; i < array.diameter(); ++i) {
    const Rational& c_next = array.c_list[i];
    if (sgn(c_next) == 0) {
      throw Error(ErrorCode::DivisionByZero,
                  "c_" + std::to_string(i + 1) + " is zero");
    }
    layer = layer * array.b_list[i] / c_next;
    n += layer;
  }
  return n;
}

FeasibilityReport validate(const ClassicalParams& params) {
  FeasibilityReport report;
  auto fail = [&](std::string id, std::string detail) {
    report.violations.push_back({std::move(id), std::move(detail)});
  };

  if (params.diameter < 1) {
    fail("D_nonpositive", "D=" + std::to_string(params.diameter));
    report.feasible = false;
    return report;
  }

  const long b = params.b;
  const Rational& alpha = params.alpha;
  const Rational& beta = params.beta;

  if (b == 0 || b == -1) {
    fail("b_forbidden", "b forbidden: b=" + std::to_string(b) +
                            " (must not be 0 or -1)");
  }
  const Rational scaled_alpha = (1 + b) * alpha;
  if (!is_integer(scaled_alpha)) {
    fail("(1+b)alpha_nonintegral",
         "(1+b)alpha=" + to_fraction_string(scaled_alpha));
  }
  if (params.diameter >= 3) {
    if (b >= 1 && sgn(alpha) < 0) {
      fail("Lemma4(i)", "b>=1 requires alpha>=0, alpha=" +
                            to_fraction_string(alpha));
    }
    if (b <= -2 && !(alpha < -1)) {
      fail("Lemma4(ii)", "b<=-2 requires alpha<-1, alpha=" +
                             to_fraction_string(alpha));
    }
  }
  if (params.diameter == 3) {
    const Rational bound = 1 + scaled_alpha;
    if (beta < bound || bound < 1) {
      fail("Lemma4(iii)", "requires beta>=1+(1+b)alpha>=1, beta=" +
                              to_fraction_string(beta) +
                              ", 1+(1+b)alpha=" + to_fraction_string(bound));
    }
  }

  const IntersectionArray array = raw_intersection_array(params);
  const int D = array.diameter();
  for (int i = 0; i < D; ++i) {
    const Rational& v = array.b_list[i];
    const std::string name = "b" + std::to_string(i);
    if (sgn(v) <= 0) fail(name + "_nonpositive", name + "=" + short_string(v));
    if (!is_integer(v)) fail(name + "_nonintegral", name + "=" + short_string(v));
  }
  for (int i = 1; i <= D; ++i) {
    const Rational& v = array.c_list[i - 1];
    const std::string name = "c" + std::to_string(i);
    if (sgn(v) <= 0) fail(name + "_nonpositive", name + "=" + short_string(v));
    if (!is_integer(v)) fail(name + "_nonintegral", name + "=" + short_string(v));
  }
  for (int i = 0; i <= D; ++i) {
    const Rational& v = array.a_list[i];
    const std::string name = "a" + std::to_string(i);
    if (sgn(v) < 0) fail(name + "_negative", name + "=" + short_string(v));
    if (!is_integer(v)) fail(name + "_nonintegral", name + "=" + short_string(v));
  }
  const bool any_zero_c =
      std::any_of(array.c_list.begin(), array.c_list.end(),
                  [](const Rational& c) { return sgn(c) == 0; });
  if (any_zero_c) {
    fail("n_undefined", "some c_i is zero");
  } else {
    const Rational& n = array.vertex_count;
    if (sgn(n) <= 0) fail("n_nonpositive", "n=" + short_string(n));
    if (!is_integer(n)) fail("n_nonintegral", "n=" + short_string(n));
  }

  report.feasible = report.violations.empty();
  return report;
}

IntersectionArray intersection_array(const ClassicalParams& params) {
  const FeasibilityReport report = validate(params);
  if (!report.feasible) {
    std::string what = to_string(params) + " violates";
    for (const auto& v : report.violations) what += " " + v.id;
    throw Error(ErrorCode::InfeasibleParams, what);
  }
  return raw_intersection_array(params);
}

std::vector<Rational> adjacency_eigenvalues(const ClassicalParams& params) {
  const IntersectionArray array = intersection_array(params);
  const int D = array.diameter();
  std::vector<Rational> theta;
  theta.reserve(D + 1);
  for (int i = 0; i <= D; ++i) {
    const Rational bi = array.b_at(i);
    theta.emplace_back(bi / power(Rational(params.b), i) -
                       gaussian_binomial(static_cast<unsigned>(i), params.b));
  }
  return theta;
}

EigenvalueTriple laplacian_eigenvalues_sorted(const ClassicalParams& params) {
  if (params.diameter != 3) {
    throw Error(ErrorCode::WrongDiameter,
                "sorted Laplacian triple needs D=3, got D=" +
                    std::to_string(params.diameter));
  }
  const std::vector<Rational> theta = adjacency_eigenvalues(params);
  const Rational& d = theta[0];
  const std::array<Rational, 3> gamma{d - theta[1], d - theta[2],
                                      d - theta[3]};

  EigenvalueTriple triple;
  triple.gamma_index = params.b >= 1 ? std::array<int, 3>{1, 2, 3}
                                     : std::array<int, 3>{2, 3, 1};
  for (int j = 0; j < 3; ++j) {
    triple.lambda[j] = gamma[triple.gamma_index[j] - 1];
  }
  const auto& l = triple.lambda;
  if (!(sgn(l[0]) > 0 && l[0] < l[1] && l[1] < l[2])) {
    throw Error(ErrorCode::UnexpectedOrdering,
                to_string(params) + " gives gammas " +
                    to_fraction_string(gamma[0]) + ", " +
                    to_fraction_string(gamma[1]) + ", " +
                    to_fraction_string(gamma[2]));
  }
  return triple;
}

std::string to_string(const ClassicalParams& params) {
  std::ostringstream os;
  os << "(" << params.diameter << ", " << params.b << ", "
     << short_string(params.alpha) << ", " << short_string(params.beta)
     << ")";
  return os.str();
}

std::string to_string(const IntersectionArray& array) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < array.b_list.size(); ++i) {
    os << (i ? "," : "") << short_string(array.b_list[i]);
  }
  os << ";";
  for (std::size_t i = 0; i < array.c_list.size(); ++i) {
    os << (i ? "," : "") << short_string(array.c_list[i]);
  }
  os << "}";
  return os.str();
}

}  // namespace mnhd
