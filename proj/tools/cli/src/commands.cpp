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

#include "mnhd/cli/commands.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mnhd/antipodal.hpp"
#include "mnhd/error.hpp"
#include "mnhd/graph_io.hpp"

namespace mnhd::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double parse_double(std::string_view text) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::InvalidArgument,
                "not a number: '" + std::string(text) + "'");
  }
  return value;
}

// Delta profiles and L^2 entries of a diameter-3 distance-regular graph,
// closed forms in double precision against the decomposition.
void drg_cross_checks(const Graph& g, const DistanceMatrix& dist,
                      const IntersectionArray& array,
                      const SpectralDecomposition& decomp,
                      const Eigen::MatrixXd& lap, Report& report) {
  const Eigen::MatrixXd lap2 = lap * lap;
  double l2_dev = 0.0;
  const auto n = g.vertex_count();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      const int k = static_cast<int>(*dist.at(u, v));
      l2_dev = std::max(l2_dev, std::abs(lap2(u, v) - l2_entry(array, k).get_d()));
    }
  }
  report.spectral_checks["l2_entry_vs_literal"] = l2_dev;

  if (decomp.positive_count() != 3) return;
  const SpectrumContext<double> ctx = make_context<double>(
      array.degree.get_d(), array.vertex_count.get_d(),
      {decomp.eigenvalues[1], decomp.eigenvalues[2], decomp.eigenvalues[3]});
  double delta_dev = 0.0;
  for (int k = 1; k <= 3; ++k) {
    Vertex v = 0;
    while (*dist.at(0, v) != static_cast<std::size_t>(k)) ++v;
    const LaplacianPairData<double> pair{lap(0, v), lap2(0, v)};
    const auto closed = delta_closed_form(ctx, pair);
    const auto proj = delta_from_projections(decomp, 0, v);
    for (int i = 1; i <= 3; ++i) {
      delta_dev = std::max(delta_dev, std::abs(closed.single(i) - proj.single(i)));
      for (int j = i + 1; j <= 3; ++j) {
        delta_dev = std::max(delta_dev, std::abs(closed.pair(i, j) - proj.pair(i, j)));
      }
    }
  }
  report.spectral_checks["delta_closed_form_vs_projection"] = delta_dev;
}

}  // namespace

GridSpec parse_grid(std::string_view text) {
  const auto c1 = text.find(',');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(',', c1 + 1);
  if (c2 == std::string_view::npos || text.find(',', c2 + 1) != std::string_view::npos) {
    throw Error(ErrorCode::InvalidArgument,
                "grid must be tmin,tmax,points, got '" + std::string(text) + "'");
  }
  GridSpec grid;
  grid.t_min = parse_double(text.substr(0, c1));
  grid.t_max = parse_double(text.substr(c1 + 1, c2 - c1 - 1));
  const double points = parse_double(text.substr(c2 + 1));
  if (!(points >= 2) || points != std::floor(points)) {
    throw Error(ErrorCode::InvalidArgument, "grid needs an integer point count >= 2");
  }
  grid.points = static_cast<std::size_t>(points);
  grid.times();  // validates the bounds
  return grid;
}

Report cmd_params_certify(long b, const std::string& alpha,
                          const std::string& beta) {
  const auto start = Clock::now();
  Report report;
  report.command = "certify";
  report.input = {{"b", std::to_string(b)}, {"alpha", alpha}, {"beta", beta}};
  ClassicalParams params;
  params.b = b;
  try {
    params.alpha = parse_rational(alpha);
    params.beta = parse_rational(beta);
  } catch (const Error& e) {
    report.exit_code = kExitUsage;
    report.message = e.what();
    return report;
  }
  report.input["alpha"] = to_fraction_string(params.alpha);
  report.input["beta"] = to_fraction_string(params.beta);

  const FeasibilityReport feasibility = validate(params);
  if (!feasibility.feasible) {
    report.violations = feasibility.violations;
    report.exit_code = kExitInfeasible;
    report.message = "infeasible parameters " + to_string(params);
    report.elapsed_seconds = seconds_since(start);
    return report;
  }
  report.intersection_array = to_string(intersection_array(params));
  try {
    const auto verdict = certify_classical(params);
    report.verdict = summarize(verdict);
    report.exit_code = verdict.certified() ? kExitOk : kExitNotCertified;
  } catch (const Error& e) {
    report.exit_code = kExitNotCertified;
    report.message = e.what();
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

Report cmd_antipodal_certify(long d, long gamma, long m) {
  const auto start = Clock::now();
  Report report;
  report.command = "antipodal";
  report.input = {{"d", std::to_string(d)},
                  {"gamma", std::to_string(gamma)},
                  {"m", std::to_string(m)}};
  const AntipodalParams params{d, gamma, m};
  const FeasibilityReport feasibility = validate(params);
  if (!feasibility.feasible) {
    report.violations = feasibility.violations;
    report.exit_code = kExitInfeasible;
    report.message = "infeasible array " + to_string(params);
    report.elapsed_seconds = seconds_since(start);
    return report;
  }
  report.intersection_array = to_string(params);
  try {
    const auto verdict = certify_antipodal(params);
    report.verdict = summarize(verdict);
    report.exit_code = verdict.certified() ? kExitOk : kExitNotCertified;
  } catch (const Error& e) {
    report.exit_code = e.code() == ErrorCode::OrderingViolation
                           ? kExitInfeasible
                           : kExitNotCertified;
    report.message = e.what();
  }
  report.elapsed_seconds = seconds_since(start);
  return report;
}

Report cmd_graph_analyze(const AnalyzeOptions& options) {
  const auto start = Clock::now();
  Report report;
  report.command = "analyze";
  report.input = {{"path", options.path.string()},
                  {"tol", std::to_string(options.tol)}};
  auto fail = [&](int code, std::string message) {
    report.exit_code = code;
    report.message = std::move(message);
    report.elapsed_seconds = seconds_since(start);
    return report;
  };

  std::optional<Graph> loaded;
  try {
    loaded.emplace(read_edge_list(options.path));
  } catch (const ParseError& e) {
    return fail(kExitDataError, options.path.string() + ": " + e.what());
  } catch (const Error& e) {
    return fail(kExitDataError, options.path.string() + ": " + e.what());
  }
  const Graph& g = *loaded;
  const std::size_t n = g.vertex_count();
  if (options.pair) {
    const auto [u, v] = *options.pair;
    report.input["pair"] = std::to_string(u) + " " + std::to_string(v);
    if (u >= n || v >= n || u == v) {
      return fail(kExitUsage, "pair must be two distinct vertices below " +
                                  std::to_string(n));
    }
  }
  const DistanceMatrix dist(g);
  if (!dist.connected()) {
    return fail(kExitDataError, options.path.string() + ": graph is disconnected");
  }

  GraphSummary summary;
  summary.vertices = n;
  summary.edges = g.edge_count();
  summary.regular_degree = g.regular_degree();
  summary.diameter = dist.diameter();
  const std::optional<IntersectionArray> array = check_distance_regular(g);
  if (array) summary.intersection_array = to_string(*array);
  summary.walk_max_len = options.walk_max_len != 0
                             ? options.walk_max_len
                             : static_cast<unsigned>(std::clamp<std::size_t>(n, 2, 32));
  summary.walk_regular = check_walk_regular(g, summary.walk_max_len);

  const Eigen::MatrixXd lap = laplacian(g);
  SpectralDecomposition decomp;
  try {
    decomp = eigendecompose(lap);
  } catch (const Error& e) {
    report.graph = summary;
    return fail(kExitNotCertified, e.what());
  }
  summary.eigenvalues = decomp.eigenvalues;
  summary.multiplicities = decomp.multiplicities;
  report.graph = summary;

  const HygieneReport hygiene = spectral_hygiene(decomp, lap);
  report.spectral_checks = {{"identity_sum", hygiene.identity_sum},
                            {"cross_product", hygiene.cross_product},
                            {"idempotence", hygiene.idempotence},
                            {"kernel_projection", hygiene.kernel_projection},
                            {"reconstruction", hygiene.reconstruction},
                            {"heat_row_sum", hygiene.heat_row_sum},
                            {"heat_min_entry", hygiene.heat_min_entry},
                            {"semigroup", hygiene.semigroup},
                            {"diagonal_spread", hygiene.diagonal_spread}};
  if (array && array->diameter() == 3) {
    drg_cross_checks(g, dist, *array, decomp, lap, report);
  }

  std::vector<std::pair<Vertex, Vertex>> pairs;
  if (options.pair) {
    pairs.push_back(*options.pair);
  } else if (array || n > options.all_pairs_limit) {
    for (std::size_t k = 1; k <= dist.diameter(); ++k) {
      for (Vertex v = 0; v < n; ++v) {
        if (*dist.at(0, v) == k) {
          pairs.emplace_back(0, v);
          break;
        }
      }
    }
  } else {
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u != v) pairs.emplace_back(u, v);
      }
    }
  }

  bool violated = false;
  for (const auto& [u, v] : pairs) {
    const MonotonicityReport scan =
        monotonicity_scan(decomp, u, v, options.grid, options.tol);
    violated = violated || !scan.ok();
    report.scans.push_back(summarize(scan, static_cast<int>(*dist.at(u, v))));
  }
  report.exit_code = violated ? kExitNotCertified : kExitOk;
  report.elapsed_seconds = seconds_since(start);
  return report;
}

Report cmd_sweep(const SweepArgs& args) {
  const auto start = Clock::now();
  Report report;
  report.command = "sweep";
  report.input = {{"family", args.family}, {"jobs", std::to_string(args.jobs)}};
  if (args.family == "classical") {
    report.sweep = sweep_classical(args.classical, args.jobs);
  } else if (args.family == "antipodal") {
    report.sweep = sweep_antipodal(args.antipodal, args.jobs);
  } else {
    report.exit_code = kExitUsage;
    report.message = "unknown family " + args.family;
    return report;
  }
  report.exit_code = report.sweep->anomalies.empty() ? kExitOk : kExitNotCertified;
  report.elapsed_seconds = seconds_since(start);
  return report;
}

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Exact and numeric checks of monotone normalized heat diffusion "
               "on distance-regular graphs",
               "mnhd"};
  app.require_subcommand(1);
  std::string emit_json;

  auto* certify = app.add_subcommand("certify", "Certify classical parameters (3, b, alpha, beta)");
  long b = 0;
  std::string alpha;
  std::string beta;
  certify->add_option("--b", b, "integer b, not 0 or -1")->required();
  certify->add_option("--alpha", alpha, "rational alpha, p/q or integer")->required();
  certify->add_option("--beta", beta, "rational beta, p/q or integer")->required();

  auto* antipodal = app.add_subcommand("antipodal", "Certify the antipodal array {d, m*gamma, 1; 1, gamma, d}");
  long d = 0;
  long gamma = 0;
  long m = 0;
  antipodal->add_option("--d", d, "degree")->required();
  antipodal->add_option("--gamma", gamma, "c_2")->required();
  antipodal->add_option("--m", m, "antipodal class size minus one")->required();

  auto* analyze = app.add_subcommand("analyze", "Analyze a graph given as an edge list");
  AnalyzeOptions analyze_options;
  std::string path;
  std::vector<std::size_t> pair;
  std::string grid_text;
  analyze->add_option("path", path, "edge-list file: 'n m' header, then 'u v' lines")->required();
  analyze->add_option("--pair", pair, "scan only this ordered pair")->expected(2);
  analyze->add_option("--grid", grid_text, "tmin,tmax,points");
  analyze->add_option("--tol", analyze_options.tol, "violation tolerance on h");
  analyze->add_option("--walk-max-len", analyze_options.walk_max_len,
                      "longest closed-walk length checked (default min(n, 32))");

  auto* sweep = app.add_subcommand("sweep", "Certify every point of a parameter grid");
  SweepArgs sweep_args;
  sweep->add_option("--family", sweep_args.family, "classical or antipodal")
      ->check(CLI::IsMember({"classical", "antipodal"}));
  sweep->add_option("--b-min", sweep_args.classical.b_min);
  sweep->add_option("--b-max", sweep_args.classical.b_max);
  sweep->add_option("--k-min", sweep_args.classical.k_min, "lower bound on (1+b)alpha");
  sweep->add_option("--k-max", sweep_args.classical.k_max, "upper bound on (1+b)alpha");
  sweep->add_option("--beta-max", sweep_args.classical.beta_max);
  sweep->add_option("--d-max", sweep_args.antipodal.d_max);
  sweep->add_option("--gamma-max", sweep_args.antipodal.gamma_max);
  sweep->add_option("--m-max", sweep_args.antipodal.m_max);
  sweep->add_option("--jobs", sweep_args.jobs, "worker threads")->check(CLI::PositiveNumber);

  for (auto* sub : {certify, antipodal, analyze, sweep}) {
    sub->add_option("--emit-json", emit_json, "write the JSON report to this path");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  Report report;
  if (*certify) {
    report = cmd_params_certify(b, alpha, beta);
  } else if (*antipodal) {
    report = cmd_antipodal_certify(d, gamma, m);
  } else if (*analyze) {
    analyze_options.path = path;
    if (!pair.empty()) analyze_options.pair = std::pair{pair[0], pair[1]};
    if (!grid_text.empty()) {
      try {
        analyze_options.grid = parse_grid(grid_text);
      } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
      }
    }
    report = cmd_graph_analyze(analyze_options);
  } else {
    report = cmd_sweep(sweep_args);
  }

  std::cout << render_text(report);
  if (!emit_json.empty()) {
    std::ofstream out(emit_json);
    out << to_json_value(report).dump(2) << "\n";
    if (!out) {
      std::cerr << "cannot write " << emit_json << "\n";
      return kExitUsage;
    }
  }
  return report.exit_code;
}

}  // namespace mnhd::cli
