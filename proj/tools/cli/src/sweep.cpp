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

#include "mnhd/cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <tuple>

#include "mnhd/error.hpp"

namespace mnhd::cli {

namespace {

struct Outcome {
  std::string key;
  bool feasible = false;
  std::vector<std::string> violation_ids;
  bool certified = false;
  std::vector<std::string> reasons;
  std::vector<std::string> notes;
  std::optional<VerdictSummary> verdict;
  std::vector<std::string> fired;
  std::vector<std::string> expected;
};

template <class Item, class Fn>
std::vector<Outcome> parallel_map(const std::vector<Item>& items, unsigned jobs,
                                  Fn fn) {
  std::vector<Outcome> out(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < items.size(); i = next++) {
      out[i] = fn(items[i]);
    }
  };
  const unsigned n = std::max(1u, jobs);
  if (n == 1) {
    worker();
    return out;
  }
  std::vector<std::thread> pool;
  pool.reserve(n);
  for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  return out;
}

template <class T>
void audit(const MnhdVerdict<T>& v, Outcome& out) {
  out.certified = v.certified();
  if (!out.certified) out.reasons.emplace_back("not_certified");
  if (sign(v.lambda_excess) < 0) out.reasons.emplace_back("lambda_excess_negative");
  for (const auto& row : v.per_distance) {
    const std::string tag = "distance" + std::to_string(row.distance) + ":";
    for (int i = 1; i <= 3; ++i) {
      if (sign(row.profile.single(i)) < 0) {
        out.reasons.push_back(tag + "delta" + std::to_string(i) + "_negative");
      }
    }
    if (!row.forms_agree) out.reasons.push_back(tag + "forms_disagree");
    if (!row.expected_holds) out.reasons.push_back(tag + "expected_case_fails");
    if (row.distance == 1 && sign(row.l2_minus_l_23) < 0) {
      out.reasons.push_back(tag + "l2_minus_l_negative");
    }
    out.fired.push_back("d" + std::to_string(row.distance) + ":" +
                        (row.fired ? std::string(to_string(*row.fired)) : "none"));
    out.expected.push_back("d" + std::to_string(row.distance) + ":" +
                           std::string(to_string(row.expected)));
  }
  out.notes = v.notes;
  if (!out.reasons.empty()) out.verdict = summarize(v);
}

SweepSummary aggregate(std::string family,
                       std::map<std::string, std::string> ranges,
                       const std::vector<Outcome>& outcomes) {
  SweepSummary s;
  s.family = std::move(family);
  s.ranges = std::move(ranges);
  s.total = outcomes.size();
  for (const auto& o : outcomes) {
    if (!o.feasible) {
      ++s.infeasible;
      for (const auto& id : o.violation_ids) ++s.violation_counts[id];
      continue;
    }
    ++s.feasible;
    ++(o.certified ? s.certified : s.not_certified);
    for (const auto& f : o.fired) ++s.fired_counts[f];
    for (const auto& e : o.expected) ++s.expected_counts[e];
    if (!o.reasons.empty()) s.anomalies.push_back({o.key, o.reasons, o.verdict});
    for (const auto& n : o.notes) s.flagged.push_back(o.key + ": " + n);
  }
  return s;
}

Outcome run_classical(const ClassicalParams& p) {
  Outcome out;
  out.key = to_string(p);
  const FeasibilityReport report = validate(p);
  if (!report.feasible) {
    for (const auto& v : report.violations) out.violation_ids.push_back(v.id);
    return out;
  }
  out.feasible = true;
  try {
    const auto verdict = certify_classical(p);
    audit(verdict, out);
    const IntersectionArray array = intersection_array(p);
    const auto ctx = make_context(array.degree, array.vertex_count,
                                  laplacian_eigenvalues_sorted(p));
    if (delta12_distance1(ctx, array) != verdict.per_distance[0].profile.delta12) {
      out.reasons.emplace_back("distance1:delta12_form_mismatch");
      out.verdict = summarize(verdict);
    }
  } catch (const Error& e) {
    out.reasons.emplace_back(std::string("error: ") + e.what());
  }
  return out;
}

Outcome run_antipodal(const AntipodalParams& p) {
  Outcome out;
  out.key = "d=" + std::to_string(p.d) + " gamma=" + std::to_string(p.gamma_c2) +
            " m=" + std::to_string(p.m);
  const FeasibilityReport report = validate(p);
  if (!report.feasible) {
    for (const auto& v : report.violations) out.violation_ids.push_back(v.id);
    return out;
  }
  out.feasible = true;
  try {
    audit(certify_antipodal(p), out);
  } catch (const Error& e) {
    out.reasons.emplace_back(std::string("error: ") + e.what());
  }
  return out;
}

}  // namespace

std::vector<ClassicalParams> classical_grid(const ClassicalSweepRange& range) {
  std::vector<ClassicalParams> grid;
  for (long b = range.b_min; b <= range.b_max; ++b) {
    if (b == 0 || b == -1) continue;
    const long q = 1 + b + b * b;
    for (long k = range.k_min; k <= range.k_max; ++k) {
      const Rational alpha = Rational(k) / (1 + b);
      for (long j = 1; j <= range.beta_max * q; ++j) {
        ClassicalParams p;
        p.b = b;
        p.alpha = alpha;
        p.beta = Rational(j) / q;
        grid.push_back(p);
      }
    }
  }
  std::sort(grid.begin(), grid.end(), [](const auto& x, const auto& y) {
    if (x.b != y.b) return x.b < y.b;
    if (x.alpha != y.alpha) return x.alpha < y.alpha;
    return x.beta < y.beta;
  });
  return grid;
}

std::vector<AntipodalParams> antipodal_grid(const AntipodalSweepRange& range) {
  std::vector<AntipodalParams> grid;
  for (long d = 1; d <= range.d_max; ++d) {
    for (long g = 1; g <= range.gamma_max; ++g) {
      for (long m = 1; m <= range.m_max; ++m) grid.push_back({d, g, m});
    }
  }
  return grid;
}

SweepSummary sweep_classical(const ClassicalSweepRange& range, unsigned jobs) {
  const auto grid = classical_grid(range);
  return aggregate("classical",
                   {{"b", std::to_string(range.b_min) + ".." + std::to_string(range.b_max)},
                    {"(1+b)alpha", std::to_string(range.k_min) + ".." + std::to_string(range.k_max)},
                    {"beta_max", std::to_string(range.beta_max)}},
                   parallel_map(grid, jobs, run_classical));
}

SweepSummary sweep_antipodal(const AntipodalSweepRange& range, unsigned jobs) {
  const auto grid = antipodal_grid(range);
  return aggregate("antipodal",
                   {{"d_max", std::to_string(range.d_max)},
                    {"gamma_max", std::to_string(range.gamma_max)},
                    {"m_max", std::to_string(range.m_max)}},
                   parallel_map(grid, jobs, run_antipodal));
}

}  // namespace mnhd::cli
