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

#ifndef MNHD_ANTIPODAL_HPP
#define MNHD_ANTIPODAL_HPP

#include <array>
#include <string>

#include "mnhd/classical_params.hpp"
#include "mnhd/mnhd_analysis.hpp"
#include "mnhd/quadratic.hpp"

namespace mnhd {

/// Antipodal diameter-3 array {d, m*gamma, 1; 1, gamma, d}.
struct AntipodalParams {
  long d = 1;
  long gamma_c2 = 1;
  long m = 1;

  bool operator==(const AntipodalParams&) const = default;
};

/// Violated constraints: positive entries, a_1 = d - m gamma - 1 >= 0,
/// a_2 = d - gamma - 1 >= 0 and 2d - 2 - gamma - m gamma >= 0 (which is
/// lambda_1 + lambda_2 - lambda_3 >= 0).
FeasibilityReport validate(const AntipodalParams& p);

/// Throws Error(InfeasibleParams) if validate() reports anything.
IntersectionArray antipodal_array(const AntipodalParams& p);

/// 1 + d + m + dm.
Integer antipodal_vertex_count(const AntipodalParams& p);

/// M^2 = 4d + (d - gamma - m gamma - 1)^2.
Integer antipodal_m_squared(const AntipodalParams& p);

/// lambda_{1,3} = d + (1 - d + gamma + m gamma -/+ M)/2, lambda_2 = 1 + d.
/// Throws Error(OrderingViolation) unless 0 < l1 < l2 < l3.
std::array<QuadraticNumber, 3> antipodal_eigenvalues(const AntipodalParams& p);

/// Exact checks of the closed-form facts behind the certification.
struct AntipodalIdentities {
  bool excess_square_difference = false;     // (1+d)^2 - M^2 = gamma(1+m)(2d-2-gamma-m gamma)
  bool distance3_square_difference = false;  // (1+d+gamma+m gamma)^2 - M^2 = 4d(1+m)gamma
  bool distance1_delta1_ratio = false;       // Delta_1 / C_1 = m gamma
  bool distance2_delta2_ratio = false;       // Delta_2 / C_2 = -gamma
  bool distance1_delta12_bracket = false;    // = -lambda_3 b_1
  bool distance3_delta2_zero = false;
  bool distance3_delta13_zero = false;

  bool all() const {
    return excess_square_difference && distance3_square_difference &&
           distance1_delta1_ratio && distance2_delta2_ratio &&
           distance1_delta12_bracket && distance3_delta2_zero &&
           distance3_delta13_zero;
  }
};

AntipodalIdentities antipodal_identities(const AntipodalParams& p);

/// Certification in Q(sqrt(M^2)). Any failed identity is listed in
/// the notes and forces not_certified. Throws Error(InfeasibleParams).
MnhdVerdict<QuadraticNumber> certify_antipodal(const AntipodalParams& p);

std::string to_string(const AntipodalParams& p);

}  // namespace mnhd

#endif  // MNHD_ANTIPODAL_HPP
