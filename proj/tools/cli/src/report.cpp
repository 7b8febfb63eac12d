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

#include "mnhd/cli/report.hpp"

#include <sstream>

#include "mnhd/error.hpp"

namespace mnhd {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Violation, id, detail)

namespace cli {

using nlohmann::json;

namespace {

template <class T>
void put_optional(json& j, const char* key, const std::optional<T>& value) {
  j[key] = value ? json(*value) : json(nullptr);
}

template <class T>
void get_optional(const json& j, const char* key, std::optional<T>& value) {
  if (!j.contains(key) || j.at(key).is_null()) {
    value.reset();
  } else {
    value = j.at(key).get<T>();
  }
}

}  // namespace

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(CaseWitness, distance, L, L2, deltas,
                                   l2_minus_l_23, l2_minus_l_12, l2_minus_l_13,
                                   fired, expected, expected_holds, forms_agree)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(VerdictSummary, status, lambda,
                                   lambda_excess, per_distance, notes)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ScanSummary, u, v, distance, grid_points,
                                   min_h, argmin_t, violations, r_at_start,
                                   r_end_error, refined, refined_min_h)

void to_json(json& j, const GraphSummary& g) {
  j = json{{"vertices", g.vertices},
           {"edges", g.edges},
           {"diameter", g.diameter},
           {"walk_regular", g.walk_regular},
           {"walk_max_len", g.walk_max_len},
           {"eigenvalues", g.eigenvalues},
           {"multiplicities", g.multiplicities}};
  put_optional(j, "regular_degree", g.regular_degree);
  put_optional(j, "intersection_array", g.intersection_array);
}

void from_json(const json& j, GraphSummary& g) {
  j.at("vertices").get_to(g.vertices);
  j.at("edges").get_to(g.edges);
  j.at("diameter").get_to(g.diameter);
  j.at("walk_regular").get_to(g.walk_regular);
  j.at("walk_max_len").get_to(g.walk_max_len);
  j.at("eigenvalues").get_to(g.eigenvalues);
  j.at("multiplicities").get_to(g.multiplicities);
  get_optional(j, "regular_degree", g.regular_degree);
  get_optional(j, "intersection_array", g.intersection_array);
}

void to_json(json& j, const SweepAnomaly& a) {
  j = json{{"params", a.params}, {"reasons", a.reasons}};
  put_optional(j, "verdict", a.verdict);
}

void from_json(const json& j, SweepAnomaly& a) {
  j.at("params").get_to(a.params);
  j.at("reasons").get_to(a.reasons);
  get_optional(j, "verdict", a.verdict);
}

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(SweepSummary, family, ranges, total,
                                   feasible, infeasible, certified,
                                   not_certified, violation_counts,
                                   fired_counts, expected_counts, anomalies,
                                   flagged)

ScanSummary summarize(const MonotonicityReport& r, int distance) {
  ScanSummary s;
  s.u = r.u;
  s.v = r.v;
  s.distance = distance;
  s.grid_points = r.grid.size();
  s.min_h = r.min_h;
  s.argmin_t = r.argmin_t;
  for (const auto& [t, h] : r.violations) s.violations.push_back({t, h});
  s.r_at_start = r.r_at_start;
  s.r_end_error = r.r_end_error;
  s.refined = r.refined;
  s.refined_min_h = r.refined_min_h;
  return s;
}

json to_json_value(const Report& r) {
  json j{{"schema", r.schema},
         {"command", r.command},
         {"input", r.input},
         {"exit_code", r.exit_code},
         {"message", r.message},
         {"violations", r.violations},
         {"spectral_checks", r.spectral_checks},
         {"scans", r.scans},
         {"elapsed_seconds", r.elapsed_seconds}};
  put_optional(j, "intersection_array", r.intersection_array);
  put_optional(j, "verdict", r.verdict);
  put_optional(j, "graph", r.graph);
  put_optional(j, "sweep", r.sweep);
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  j.at("schema").get_to(r.schema);
  if (r.schema != kSchema) {
    throw Error(ErrorCode::InvalidArgument, "unknown report schema " + r.schema);
  }
  j.at("command").get_to(r.command);
  j.at("input").get_to(r.input);
  j.at("exit_code").get_to(r.exit_code);
  j.at("message").get_to(r.message);
  j.at("violations").get_to(r.violations);
  j.at("spectral_checks").get_to(r.spectral_checks);
  j.at("scans").get_to(r.scans);
  j.at("elapsed_seconds").get_to(r.elapsed_seconds);
  get_optional(j, "intersection_array", r.intersection_array);
  get_optional(j, "verdict", r.verdict);
  get_optional(j, "graph", r.graph);
  get_optional(j, "sweep", r.sweep);
  return r;
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os.precision(17);
  if (!r.message.empty()) os << r.message << "\n";
  if (r.intersection_array) os << "array " << *r.intersection_array << "\n";
  for (const auto& v : r.violations) os << "violation " << v.id << ": " << v.detail << "\n";
  if (r.verdict) {
    const auto& v = *r.verdict;
    os << "status " << v.status << "\n";
    os << "lambda";
    for (const auto& l : v.lambda) os << " " << l;
    os << "\nlambda1+lambda2-lambda3 " << v.lambda_excess << "\n";
    for (const auto& w : v.per_distance) {
      os << "distance " << w.distance << ": case " << w.fired << " (expected "
         << w.expected << (w.expected_holds ? ", holds" : ", fails") << ")\n";
    }
    for (const auto& n : v.notes) os << "note " << n << "\n";
  }
  if (r.graph) {
    const auto& g = *r.graph;
    os << "graph n=" << g.vertices << " m=" << g.edges << " diameter=" << g.diameter << "\n";
    if (g.intersection_array) {
      os << "distance-regular " << *g.intersection_array << "\n";
    } else {
      os << "not distance-regular\n";
    }
    os << (g.walk_regular ? "walk-regular" : "not walk-regular")
       << " (lengths 2.." << g.walk_max_len << ")\n";
  }
  for (const auto& [name, value] : r.spectral_checks) {
    os << "check " << name << " " << value << "\n";
  }
  for (const auto& s : r.scans) {
    os << "scan (" << s.u << "," << s.v << ") distance " << s.distance
       << " min_h " << s.min_h << " at t=" << s.argmin_t << " violations "
       << s.violations.size() << "\n";
  }
  if (r.sweep) {
    const auto& s = *r.sweep;
    os << "sweep " << s.family << ": total " << s.total << ", feasible "
       << s.feasible << ", infeasible " << s.infeasible << ", certified "
       << s.certified << ", not certified " << s.not_certified << ", anomalies "
       << s.anomalies.size() << ", flagged " << s.flagged.size() << "\n";
    for (const auto& a : s.anomalies) {
      os << "anomaly " << a.params << ":";
      for (const auto& reason : a.reasons) os << " " << reason;
      os << "\n";
    }
  }
  os << "exit " << r.exit_code << "\n";
  return os.str();
}

}  // namespace cli
}  // namespace mnhd
