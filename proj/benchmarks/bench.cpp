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

#include <benchmark/benchmark.h>

#include "mnhd/antipodal.hpp"
#include "mnhd/cli/sweep.hpp"
#include "mnhd/graph.hpp"
#include "mnhd/jacobi.hpp"
#include "mnhd/mnhd_analysis.hpp"
#include "mnhd/spectra.hpp"

namespace {

void BM_JacobiJohnson63(benchmark::State& state) {
  const Eigen::MatrixXd l = mnhd::laplacian(mnhd::johnson(6, 3));
  for (auto _ : state) benchmark::DoNotOptimize(mnhd::jacobi_eigensolver(l));
}
BENCHMARK(BM_JacobiJohnson63);

void BM_EigendecomposeJohnson63(benchmark::State& state) {
  const Eigen::MatrixXd l = mnhd::laplacian(mnhd::johnson(6, 3));
  for (auto _ : state) benchmark::DoNotOptimize(mnhd::eigendecompose(l));
}
BENCHMARK(BM_EigendecomposeJohnson63);

void BM_EigendecomposeHypercube(benchmark::State& state) {
  const Eigen::MatrixXd l = mnhd::laplacian(mnhd::hypercube(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(mnhd::eigendecompose(l));
}
BENCHMARK(BM_EigendecomposeHypercube)->DenseRange(3, 6);

void BM_CertifyClassical(benchmark::State& state) {
  mnhd::ClassicalParams p;
  p.b = -2;
  p.alpha = -3;
  p.beta = 7;
  for (auto _ : state) benchmark::DoNotOptimize(mnhd::certify_classical(p));
}
BENCHMARK(BM_CertifyClassical);

void BM_CertifyAntipodal(benchmark::State& state) {
  const mnhd::AntipodalParams p{5, 2, 1};
  for (auto _ : state) benchmark::DoNotOptimize(mnhd::certify_antipodal(p));
}
BENCHMARK(BM_CertifyAntipodal);

void BM_MonotonicityScan(benchmark::State& state) {
  const auto d = mnhd::eigendecompose(mnhd::laplacian(mnhd::icosahedron()));
  for (auto _ : state) benchmark::DoNotOptimize(mnhd::monotonicity_scan(d, 0, 1));
}
BENCHMARK(BM_MonotonicityScan);

void BM_ClassicalSweep(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(mnhd::cli::sweep_classical({}, 1));
  }
}
BENCHMARK(BM_ClassicalSweep)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
