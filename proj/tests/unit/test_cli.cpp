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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "mnhd/cli/commands.hpp"
#include "mnhd/error.hpp"
#include "mnhd/graph_io.hpp"

namespace mnhd::cli {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("mnhd_test_" + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

  fs::path write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p;
  }

  fs::path write_graph(const std::string& name, const Graph& g) const {
    std::ostringstream out;
    write_edge_list(out, g);
    return write(name, out.str());
  }

 private:
  fs::path path_;
};

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "mnhd");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data());
}

TEST(ParamsCertify, Examples) {
  const Report cube = cmd_params_certify(1, "0", "1");
  EXPECT_EQ(cube.exit_code, kExitOk);
  EXPECT_EQ(cube.intersection_array, "{3,2,1;1,2,3}");
  ASSERT_TRUE(cube.verdict);
  EXPECT_EQ(cube.verdict->status, "certified");
  EXPECT_EQ(cube.verdict->lambda, (std::vector<std::string>{"2/1", "4/1", "6/1"}));

  const Report b0 = cmd_params_certify(0, "0", "1");
  EXPECT_EQ(b0.exit_code, kExitInfeasible);
  ASSERT_FALSE(b0.violations.empty());
  EXPECT_EQ(b0.violations.front().id, "b_forbidden");

  EXPECT_EQ(cmd_params_certify(-2, "-3", "7").exit_code, kExitOk);
  EXPECT_EQ(cmd_params_certify(-2, "0", "2").exit_code, kExitInfeasible);
  EXPECT_EQ(cmd_params_certify(1, "x", "1").exit_code, kExitUsage);

  const Report j63 = cmd_params_certify(1, "1", "3");
  ASSERT_TRUE(j63.verdict);
  EXPECT_EQ(j63.verdict->per_distance[1].fired, "ii");
}

TEST(AntipodalCertify, Examples) {
  const Report ico = cmd_antipodal_certify(5, 2, 1);
  EXPECT_EQ(ico.exit_code, kExitOk);
  EXPECT_EQ(ico.intersection_array, "{5,2,1;1,2,5}");
  EXPECT_EQ(cmd_antipodal_certify(2, 1, 1).exit_code, kExitOk);
  EXPECT_EQ(cmd_antipodal_certify(1, 5, 1).exit_code, kExitInfeasible);
}

TEST(GraphAnalyze, HypercubeFile) {
  TempDir dir;
  AnalyzeOptions opt;
  opt.path = dir.write_graph("q3.txt", hypercube(3));
  const Report r = cmd_graph_analyze(opt);
  EXPECT_EQ(r.exit_code, kExitOk) << r.message;
  ASSERT_TRUE(r.graph);
  EXPECT_EQ(r.graph->intersection_array, "{3,2,1;1,2,3}");
  EXPECT_TRUE(r.graph->walk_regular);
  EXPECT_EQ(r.graph->walk_max_len, 8u);
  EXPECT_EQ(r.scans.size(), 3u);
  EXPECT_LT(r.spectral_checks.at("l2_entry_vs_literal"), 1e-9);
  EXPECT_LT(r.spectral_checks.at("delta_closed_form_vs_projection"), 1e-9);
}

TEST(GraphAnalyze, PathIsNotWalkRegular) {
  TempDir dir;
  AnalyzeOptions opt;
  opt.path = dir.write("p3.txt", "3 2\n0 1\n1 2\n");
  const Report r = cmd_graph_analyze(opt);
  ASSERT_TRUE(r.graph);
  EXPECT_FALSE(r.graph->walk_regular);
  EXPECT_FALSE(r.graph->intersection_array);
  EXPECT_EQ(r.scans.size(), 6u);
}

TEST(GraphAnalyze, DataErrors) {
  TempDir dir;
  AnalyzeOptions opt;
  opt.path = dir.write("cut.txt", "3 2\n0 1\n");
  const Report cut = cmd_graph_analyze(opt);
  EXPECT_EQ(cut.exit_code, kExitDataError);
  EXPECT_NE(cut.message.find("line 3"), std::string::npos) << cut.message;

  opt.path = dir.path() / "missing.txt";
  EXPECT_EQ(cmd_graph_analyze(opt).exit_code, kExitDataError);

  opt.path = dir.write("split.txt", "4 2\n0 1\n2 3\n");
  EXPECT_EQ(cmd_graph_analyze(opt).exit_code, kExitDataError);

  opt.path = dir.write_graph("c6.txt", cycle(6));
  opt.pair = std::pair<Vertex, Vertex>{0, 0};
  EXPECT_EQ(cmd_graph_analyze(opt).exit_code, kExitUsage);
  opt.pair = std::pair<Vertex, Vertex>{0, 9};
  EXPECT_EQ(cmd_graph_analyze(opt).exit_code, kExitUsage);
  opt.pair = std::pair<Vertex, Vertex>{0, 3};
  const Report one = cmd_graph_analyze(opt);
  EXPECT_EQ(one.exit_code, kExitOk);
  ASSERT_EQ(one.scans.size(), 1u);
  EXPECT_EQ(one.scans[0].distance, 3);
}

TEST(ParseGrid, AcceptsAndRejects) {
  const GridSpec g = parse_grid("0.01,10,50");
  EXPECT_DOUBLE_EQ(g.t_min, 0.01);
  EXPECT_DOUBLE_EQ(g.t_max, 10.0);
  EXPECT_EQ(g.points, 50u);
  for (const char* bad : {"", "1,2", "a,b,c", "2,1,10", "0,1,10", "1,2,1", "1,2,3,4", "-1,2,5"}) {
    EXPECT_THROW(parse_grid(bad), Error) << bad;
  }
}

TEST(Sweep, IndependentOfJobCount) {
  SweepArgs args;
  args.classical = {-3, 3, -6, 6, 5};
  args.jobs = 1;
  const Report one = cmd_sweep(args);
  args.jobs = 3;
  const Report three = cmd_sweep(args);
  ASSERT_TRUE(one.sweep && three.sweep);
  EXPECT_EQ(*one.sweep, *three.sweep);
  EXPECT_EQ(one.exit_code, kExitOk);
  EXPECT_GT(one.sweep->feasible, 0u);

  args.family = "antipodal";
  args.antipodal = {20, 8, 8};
  args.jobs = 1;
  const auto a1 = cmd_sweep(args);
  args.jobs = 4;
  const auto a4 = cmd_sweep(args);
  EXPECT_EQ(*a1.sweep, *a4.sweep);
  EXPECT_EQ(a1.exit_code, kExitOk);
}

TEST(Json, RoundTripsEveryReportKind) {
  TempDir dir;
  AnalyzeOptions opt;
  opt.path = dir.write_graph("ico.txt", icosahedron());
  SweepArgs sweep;
  sweep.classical = {-2, 2, -4, 4, 3};
  std::vector<Report> reports{cmd_params_certify(1, "1", "3"),
                              cmd_params_certify(0, "0", "1"),
                              cmd_antipodal_certify(5, 2, 1),
                              cmd_graph_analyze(opt),
                              cmd_sweep(sweep)};
  for (const Report& r : reports) {
    const nlohmann::json j = to_json_value(r);
    EXPECT_EQ(j.at("schema"), kSchema);
    const Report back = report_from_json(nlohmann::json::parse(j.dump()));
    EXPECT_EQ(back, r) << r.command;
    EXPECT_EQ(to_json_value(back).dump(), j.dump());
  }
  nlohmann::json wrong = to_json_value(reports[0]);
  wrong["schema"] = "drg-mnhd/0";
  EXPECT_THROW(report_from_json(wrong), Error);
}

TEST(RunCli, ExitCodesAndJsonFile) {
  EXPECT_EQ(run({"certify", "--b", "1", "--alpha", "0", "--beta", "1"}), kExitOk);
  EXPECT_EQ(run({"certify", "--b", "0", "--alpha", "0", "--beta", "1"}), kExitInfeasible);
  EXPECT_EQ(run({"antipodal", "--d", "1", "--gamma", "5", "--m", "1"}), kExitInfeasible);
  EXPECT_EQ(run({}), kExitUsage);
  EXPECT_EQ(run({"certify", "--b", "1"}), kExitUsage);
  EXPECT_EQ(run({"frobnicate"}), kExitUsage);
  EXPECT_EQ(run({"sweep", "--family", "other"}), kExitUsage);

  TempDir dir;
  const fs::path out = dir.path() / "report.json";
  EXPECT_EQ(run({"antipodal", "--d", "5", "--gamma", "2", "--m", "1", "--emit-json", out.string()}),
            kExitOk);
  std::ifstream in(out);
  const Report r = report_from_json(nlohmann::json::parse(in));
  EXPECT_EQ(r.command, "antipodal");
  EXPECT_EQ(r.exit_code, kExitOk);
}

}  // namespace
}  // namespace mnhd::cli
