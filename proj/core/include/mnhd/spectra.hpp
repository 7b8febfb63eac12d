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

#ifndef MNHD_SPECTRA_HPP
#define MNHD_SPECTRA_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "mnhd/delta_profile.hpp"
#include "mnhd/graph.hpp"
#include "mnhd/jacobi.hpp"

namespace mnhd {

/// L = sum over distinct eigenvalues of lambda * P_lambda.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;         // distinct, ascending
  std::vector<std::size_t> multiplicities;  // sums to n
  std::vector<Eigen::MatrixXd> projections;

  std::size_t vertex_count() const {
    return projections.empty() ? 0 : static_cast<std::size_t>(projections.front().rows());
  }
  /// Number of non-zero distinct eigenvalues (s).
  std::size_t positive_count() const {
    return eigenvalues.empty() ? 0 : eigenvalues.size() - 1;
  }
  double spectral_radius() const {
    return eigenvalues.empty() ? 0.0 : std::max(std::abs(eigenvalues.front()),
                                                std::abs(eigenvalues.back()));
  }
};

struct EigendecomposeOptions {
  JacobiOptions jacobi;
  // New cluster when consecutive eigenvalues differ by more than
  // cluster_gap * max(1, spectral radius).
  double cluster_gap = 1e-6;
};

/// Deg - A.
Eigen::MatrixXd laplacian(const Graph& g);

/// Clusters the Jacobi spectrum into distinct eigenvalues and assembles one
/// projection per cluster from its orthonormal eigenvectors. A first
/// cluster within the gap threshold of zero is reported as exactly 0.
SpectralDecomposition eigendecompose(const Eigen::MatrixXd& laplacian_matrix,
                                     const EigendecomposeOptions& options = {});

/// H_t = sum e^{-t lambda} P_lambda. Throws Error(NegativeTime) for t < 0.
Eigen::MatrixXd heat_kernel(const SpectralDecomposition& decomp, double t);

/// d/dt H_t.
Eigen::MatrixXd heat_kernel_derivative(const SpectralDecomposition& decomp,
                                       double t);

/// r_t(u,v) = H_t(u,v) / H_t(u,u).
double ratio_r(const SpectralDecomposition& decomp, Vertex u, Vertex v,
               double t);

/// h_{u,v}(t) as the double sum over distinct eigenvalues
///   sum_i lambda_i e^{-t lambda_i} Delta_0i + sum_{i<j} (lambda_j - lambda_i)
///         e^{-t(lambda_i + lambda_j)} Delta_ij,
/// where Delta_0i reduces to Delta_i / n when P_0 = J/n.
double h_function(const SpectralDecomposition& decomp, Vertex u, Vertex v,
                  double t);

/// h_{u,v}(t) = H'_t(u,v) H_t(u,u) - H_t(u,v) H'_t(u,u), differentiating the
/// spectral sums directly. Independent of h_function's pairing.
double h_function_direct(const SpectralDecomposition& decomp, Vertex u,
                         Vertex v, double t);

/// Reads the six Delta quantities off the projections. Needs exactly three
/// non-zero eigenvalues; throws Error(WrongSpectrumSize) otherwise.
DeltaProfile<double> delta_from_projections(const SpectralDecomposition& decomp,
                                            Vertex u, Vertex v);

struct GridSpec {
  double t_min = 1e-3;
  double t_max = 1e2;
  std::size_t points = 400;
  bool include_zero = true;

  /// Geometric spacing between t_min and t_max, plus 0 when requested.
  std::vector<double> times() const;
};

struct MonotonicityReport {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<double> grid;
  double min_h = 0.0;
  double argmin_t = 0.0;
  std::vector<std::pair<double, double>> violations;  // (t, h) with h < -tol
  double r_at_start = 0.0;   // r at the first grid time
  double r_end_error = 0.0;  // |r - 1| at t_max
  bool refined = false;
  double refined_min_h = 0.0;

  bool ok() const { return violations.empty(); }
};

/// Max-norm deviations of the decomposition from the identities it must
/// satisfy. Heat-kernel quantities are taken over t in {0, 0.1, 1, 10};
/// the semigroup check over (s,t) in {(0.3,0.7), (1,1)}.
struct HygieneReport {
  double identity_sum = 0.0;       // |sum P - I|
  double cross_product = 0.0;      // max |P_a P_b|, a != b
  double idempotence = 0.0;        // max |P^2 - P|
  double kernel_projection = 0.0;  // |P_0 - J/n|
  double reconstruction = 0.0;     // |sum lambda P - L| / (1 + |L|)
  double heat_row_sum = 0.0;       // max |row sum of H_t - 1|
  double heat_min_entry = 0.0;     // min entry of H_t
  double semigroup = 0.0;          // |H_{s+t} - H_s H_t|
  double diagonal_spread = 0.0;    // max - min of diag(H_t)
};

HygieneReport spectral_hygiene(const SpectralDecomposition& decomp,
                               const Eigen::MatrixXd& laplacian_matrix);

inline constexpr double kDefaultScanTolerance = 1e-9;

/// Evaluates h_{u,v} on the grid. Any point below -tol is re-evaluated in
/// extended precision by both h routes; it counts as a violation only if
/// both stay below -tol. When the grid minimum is within 10 tol of zero a
/// ten-times denser local grid around the argmin is also scanned.
MonotonicityReport monotonicity_scan(const SpectralDecomposition& decomp,
                                     Vertex u, Vertex v,
                                     const GridSpec& grid = {},
                                     double tol = kDefaultScanTolerance);

}  // namespace mnhd

#endif  // MNHD_SPECTRA_HPP
