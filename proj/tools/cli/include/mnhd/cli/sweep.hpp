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

#ifndef MNHD_CLI_SWEEP_HPP
#define MNHD_CLI_SWEEP_HPP

#include <vector>

#include "mnhd/antipodal.hpp"
#include "mnhd/classical_params.hpp"
#include "mnhd/cli/report.hpp"

namespace mnhd::cli {

/// b in [b_min, b_max] without 0 and -1; (1+b) alpha = k for integer k in
/// [k_min, k_max]; beta = j / (1+b+b^2) for j = 1 .. beta_max (1+b+b^2).
/// The beta step is the coarsest that still reaches every integral degree
/// d = (1+b+b^2) beta, so no feasible point in range is skipped.
struct ClassicalSweepRange {
  long b_min = -6;
  long b_max = 6;
  long k_min = -12;
  long k_max = 12;
  long beta_max = 12;
};

struct AntipodalSweepRange {
  long d_max = 50;
  long gamma_max = 20;
  long m_max = 20;
};

/// Grid points sorted by (b, alpha, beta).
std::vector<ClassicalParams> classical_grid(const ClassicalSweepRange& range);

/// Grid points sorted by (d, gamma, m).
std::vector<AntipodalParams> antipodal_grid(const AntipodalSweepRange& range);

/// Runs every point on a pool of `jobs` workers (0 means 1). The summary
/// depends only on the range, never on `jobs`.
SweepSummary sweep_classical(const ClassicalSweepRange& range, unsigned jobs);
SweepSummary sweep_antipodal(const AntipodalSweepRange& range, unsigned jobs);

}  // namespace mnhd::cli

#endif  // MNHD_CLI_SWEEP_HPP
