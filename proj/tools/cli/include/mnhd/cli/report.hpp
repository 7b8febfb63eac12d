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

#ifndef MNHD_CLI_REPORT_HPP
#define MNHD_CLI_REPORT_HPP

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mnhd/classical_params.hpp"
#include "mnhd/mnhd_analysis.hpp"
#include "mnhd/quadratic.hpp"
#include "mnhd/spectra.hpp"

namespace mnhd::cli {

inline constexpr const char* kSchema = "drg-mnhd/1";

enum ExitCode : int {
  kExitOk = 0,
  kExitInfeasible = 2,
  kExitNotCertified = 3,
  kExitUsage = 64,
  kExitDataError = 65,
};

struct CaseWitness {
  int distance = 0;
  std::string L;
  std::string L2;
  std::map<std::string, std::string> deltas;  // "delta1" .. "delta23"
  std::string l2_minus_l_23;
  std::string l2_minus_l_12;
  std::string l2_minus_l_13;
  std::string fired;  // "i", "ii", "iii" or "none"
  std::string expected;
  bool expected_holds = false;
  bool forms_agree = false;

  bool operator==(const CaseWitness&) const = default;
};

struct VerdictSummary {
  std::string status;
  std::vector<std::string> lambda;
  std::string lambda_excess;
  std::vector<CaseWitness> per_distance;
  std::vector<std::string> notes;

  bool operator==(const VerdictSummary&) const = default;
};

template <class T>
VerdictSummary summarize(const MnhdVerdict<T>& v) {
  VerdictSummary s;
  s.status = std::string(to_string(v.status));
  for (const auto& l : v.lambda) s.lambda.push_back(to_exact_string(l));
  s.lambda_excess = to_exact_string(v.lambda_excess);
  for (const auto& row : v.per_distance) {
    CaseWitness w;
    w.distance = row.distance;
    w.L = to_exact_string(row.pair.L);
    w.L2 = to_exact_string(row.pair.L2);
    const auto& p = row.profile;
    w.deltas = {{"delta1", to_exact_string(p.delta1)},
                {"delta2", to_exact_string(p.delta2)},
                {"delta3", to_exact_string(p.delta3)},
                {"delta12", to_exact_string(p.delta12)},
                {"delta13", to_exact_string(p.delta13)},
                {"delta23", to_exact_string(p.delta23)}};
    w.l2_minus_l_23 = to_exact_string(row.l2_minus_l_23);
    w.l2_minus_l_12 = to_exact_string(row.l2_minus_l_12);
    w.l2_minus_l_13 = to_exact_string(row.l2_minus_l_13);
    w.fired = row.fired ? std::string(to_string(*row.fired)) : "none";
    w.expected = std::string(to_string(row.expected));
    w.expected_holds = row.expected_holds;
    w.forms_agree = row.forms_agree;
    s.per_distance.push_back(std::move(w));
  }
  s.notes = v.notes;
  return s;
}

struct ScanSummary {
  std::size_t u = 0;
  std::size_t v = 0;
  int distance = 0;
  std::size_t grid_points = 0;
  double min_h = 0.0;
  double argmin_t = 0.0;
  std::vector<std::array<double, 2>> violations;
  double r_at_start = 0.0;
  double r_end_error = 0.0;
  bool refined = false;
  double refined_min_h = 0.0;

  bool operator==(const ScanSummary&) const = default;
};

ScanSummary summarize(const MonotonicityReport& r, int distance);

struct GraphSummary {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::optional<std::size_t> regular_degree;
  std::size_t diameter = 0;
  std::optional<std::string> intersection_array;  // set iff distance-regular
  bool walk_regular = false;
  unsigned walk_max_len = 0;
  std::vector<double> eigenvalues;
  std::vector<std::size_t> multiplicities;

  bool operator==(const GraphSummary&) const = default;
};

struct SweepAnomaly {
  std::string params;
  std::vector<std::string> reasons;
  std::optional<VerdictSummary> verdict;

  bool operator==(const SweepAnomaly&) const = default;
};

struct SweepSummary {
  std::string family;
  std::map<std::string, std::string> ranges;
  std::size_t total = 0;
  std::size_t feasible = 0;
  std::size_t infeasible = 0;
  std::size_t certified = 0;
  std::size_t not_certified = 0;
  std::map<std::string, std::size_t> violation_counts;
  // "distance:case" -> count, for fired and expected cases.
  std::map<std::string, std::size_t> fired_counts;
  std::map<std::string, std::size_t> expected_counts;
  std::vector<SweepAnomaly> anomalies;
  std::vector<std::string> flagged;  // "params: note"

  bool operator==(const SweepSummary&) const = default;
};

struct Report {
  std::string schema = kSchema;
  std::string command;
  std::map<std::string, std::string> input;
  int exit_code = kExitOk;
  std::string message;
  std::optional<std::string> intersection_array;
  std::vector<Violation> violations;
  std::optional<VerdictSummary> verdict;
  std::optional<GraphSummary> graph;
  std::map<std::string, double> spectral_checks;
  std::vector<ScanSummary> scans;
  std::optional<SweepSummary> sweep;
  double elapsed_seconds = 0.0;

  bool operator==(const Report&) const = default;
};

nlohmann::json to_json_value(const Report& report);
/// Throws nlohmann::json exceptions or Error(InvalidArgument) on a schema
/// mismatch.
Report report_from_json(const nlohmann::json& j);

/// Short human-readable rendering for stdout.
std::string render_text(const Report& report);

}  // namespace mnhd::cli

#endif  // MNHD_CLI_REPORT_HPP
