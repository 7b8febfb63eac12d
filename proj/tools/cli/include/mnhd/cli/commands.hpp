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

#ifndef MNHD_CLI_COMMANDS_HPP
#define MNHD_CLI_COMMANDS_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "mnhd/cli/report.hpp"
#include "mnhd/cli/sweep.hpp"
#include "mnhd/graph.hpp"
#include "mnhd/spectra.hpp"

namespace mnhd::cli {

/// Exit 0 certified, 2 infeasible, 3 not certified, 64 when alpha or beta
/// do not parse.
Report cmd_params_certify(long b, const std::string& alpha,
                          const std::string& beta);

/// Exit 0 certified, 2 infeasible, 3 not certified.
Report cmd_antipodal_certify(long d, long gamma, long m);

struct AnalyzeOptions {
  std::filesystem::path path;
  std::optional<std::pair<Vertex, Vertex>> pair;
  GridSpec grid;
  double tol = kDefaultScanTolerance;
  // 0 picks min(n, 32).
  unsigned walk_max_len = 0;
  // Without --pair: one pair per distance class from vertex 0 when the
  // graph is distance-regular or larger than this, all ordered pairs
  // otherwise.
  std::size_t all_pairs_limit = 40;
};

/// Exit 0 without scan violations, 3 with, 65 on an unreadable, malformed
/// or disconnected graph, 64 on a bad pair.
Report cmd_graph_analyze(const AnalyzeOptions& options);

struct SweepArgs {
  std::string family = "classical";
  ClassicalSweepRange classical;
  AntipodalSweepRange antipodal;
  unsigned jobs = 1;
};

/// Exit 0 iff every feasible point certifies with no anomaly.
Report cmd_sweep(const SweepArgs& args);

/// "tmin,tmax,points". Throws Error(InvalidArgument).
GridSpec parse_grid(std::string_view text);

/// Full command-line entry point; returns the process exit code.
int run_cli(int argc, const char* const* argv);

}  // namespace mnhd::cli

#endif  // MNHD_CLI_COMMANDS_HPP
