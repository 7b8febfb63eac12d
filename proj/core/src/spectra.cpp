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

#include "mnhd/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mnhd/error.hpp"

namespace mnhd {

namespace {

void check_time(double t) {
  if (!(t >= 0.0)) {
    throw Error(ErrorCode::NegativeTime, "t=" + std::to_string(t));
  }
}

void check_pair(const SpectralDecomposition& decomp, Vertex u, Vertex v) {
  if (u == v) {
    throw Error(ErrorCode::SameVertex, "u=v=" + std::to_string(u));
  }
  const std::size_t n = decomp.vertex_count();
  if (u >= n || v >= n) {
    throw Error(ErrorCode::InvalidArgument, "vertex out of range");
  }
}

// Pairing over all distinct eigenvalues, with index 0 the
// zero eigenvalue. Terms (0, j) reduce to lambda_j/n Delta_j when P_0 = J/n.
template <class S>
S h_pairwise(const SpectralDecomposition& decomp, Vertex u, Vertex v, S t) {
  const std::size_t m = decomp.eigenvalues.size();
  S sum = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const S li = decomp.eigenvalues[i];
    const S pi_uv = decomp.projections[i](u, v);
    const S pi_uu = decomp.projections[i](u, u);
    for (std::size_t j = i + 1; j < m; ++j) {
      const S lj = decomp.eigenvalues[j];
      const S pj_uv = decomp.projections[j](u, v);
      const S pj_uu = decomp.projections[j](u, u);
      const S delta_ij = pi_uv * pj_uu - pj_uv * pi_uu;
      sum += (lj - li) * std::exp(-t * (li + lj)) * delta_ij;
    }
  }
  return sum;
}

template <class S>
S h_direct(const SpectralDecomposition& decomp, Vertex u, Vertex v, S t) {
  S h_uv = 0;
  S h_uu = 0;
  S dh_uv = 0;
  S dh_uu = 0;
  for (std::size_t i = 0; i < decomp.eigenvalues.size(); ++i) {
    const S l = decomp.eigenvalues[i];
    const S w = std::exp(-t * l);
    const S p_uv = decomp.projections[i](u, v);
    const S p_uu = decomp.projections[i](u, u);
    h_uv += w * p_uv;
    h_uu += w * p_uu;
    dh_uv -= l * w * p_uv;
    dh_uu -= l * w * p_uu;
  }
  return dh_uv * h_uu - h_uv * dh_uu;
}

// Extended-precision re-evaluation used to confirm a candidate violation.
double recheck(const SpectralDecomposition& decomp, Vertex u, Vertex v,
               double t) {
  const long double a = h_pairwise<long double>(decomp, u, v, t);
  const long double b = h_direct<long double>(decomp, u, v, t);
  return static_cast<double>(std::max(a, b));
}

}  // namespace

Eigen::MatrixXd laplacian(const Graph& g) {
  const auto n = static_cast<Eigen::Index>(g.vertex_count());
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index u = 0; u < n; ++u) {
    const auto& nbrs = g.neighbors(static_cast<Vertex>(u));
    L(u, u) = static_cast<double>(nbrs.size());
    for (Vertex v : nbrs) L(u, static_cast<Eigen::Index>(v)) = -1.0;
  }
  return L;
}

SpectralDecomposition eigendecompose(const Eigen::MatrixXd& laplacian_matrix,
                                     const EigendecomposeOptions& options) {
  const SymmetricEigen eig = jacobi_eigensolver(laplacian_matrix, options.jacobi);
  const Eigen::Index n = eig.values.size();
  SpectralDecomposition decomp;
  if (n == 0) return decomp;

  const double radius =
      std::max(std::abs(eig.values(0)), std::abs(eig.values(n - 1)));
  const double gap = options.cluster_gap * std::max(1.0, radius);

  Eigen::Index start = 0;
  for (Eigen::Index k = 1; k <= n; ++k) {
    if (k < n && eig.values(k) - eig.values(k - 1) <= gap) continue;
    const Eigen::Index size = k - start;
    const auto block = eig.vectors.middleCols(start, size);
    decomp.eigenvalues.push_back(eig.values.segment(start, size).mean());
    decomp.multiplicities.push_back(static_cast<std::size_t>(size));
    decomp.projections.emplace_back(block * block.transpose());
    start = k;
  }
  if (std::abs(decomp.eigenvalues.front()) <= gap) {
    decomp.eigenvalues.front() = 0.0;
  }
  return decomp;
}

Eigen::MatrixXd heat_kernel(const SpectralDecomposition& decomp, double t) {
  check_time(t);
  const auto n = static_cast<Eigen::Index>(decomp.vertex_count());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < decomp.eigenvalues.size(); ++i) {
    h += std::exp(-t * decomp.eigenvalues[i]) * decomp.projections[i];
  }
  return h;
}

Eigen::MatrixXd heat_kernel_derivative(const SpectralDecomposition& decomp,
                                       double t) {
  check_time(t);
  const auto n = static_cast<Eigen::Index>(decomp.vertex_count());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t i = 0; i < decomp.eigenvalues.size(); ++i) {
    const double l = decomp.eigenvalues[i];
    h -= l * std::exp(-t * l) * decomp.projections[i];
  }
  return h;
}

double ratio_r(const SpectralDecomposition& decomp, Vertex u, Vertex v,
               double t) {
  check_pair(decomp, u, v);
  check_time(t);
  double h_uv = 0.0;
  double h_uu = 0.0;
  for (std::size_t i = 0; i < decomp.eigenvalues.size(); ++i) {
    const double w = std::exp(-t * decomp.eigenvalues[i]);
    h_uv += w * decomp.projections[i](u, v);
    h_uu += w * decomp.projections[i](u, u);
  }
  return h_uv / h_uu;
}

double h_function(const SpectralDecomposition& decomp, Vertex u, Vertex v,
                  double t) {
  check_pair(decomp, u, v);
  check_time(t);
  return h_pairwise<double>(decomp, u, v, t);
}

double h_function_direct(const SpectralDecomposition& decomp, Vertex u,
                         Vertex v, double t) {
  check_pair(decomp, u, v);
  check_time(t);
  return h_direct<double>(decomp, u, v, t);
}

DeltaProfile<double> delta_from_projections(const SpectralDecomposition& decomp,
                                            Vertex u, Vertex v) {
  check_pair(decomp, u, v);
  if (decomp.positive_count() != 3) {
    throw Error(ErrorCode::WrongSpectrumSize,
                "need 3 non-zero eigenvalues, have " +
                    std::to_string(decomp.positive_count()));
  }
  auto single = [&](std::size_t i) {
    return decomp.projections[i](u, u) - decomp.projections[i](u, v);
  };
  auto pair = [&](std::size_t i, std::size_t j) {
    const auto& pi = decomp.projections[i];
    const auto& pj = decomp.projections[j];
    return pi(u, v) * pj(u, u) - pj(u, v) * pi(u, u);
  };
  DeltaProfile<double> p;
  p.delta1 = single(1);
  p.delta2 = single(2);
  p.delta3 = single(3);
  p.delta12 = pair(1, 2);
  p.delta13 = pair(1, 3);
  p.delta23 = pair(2, 3);
  return p;
}

HygieneReport spectral_hygiene(const SpectralDecomposition& decomp,
                               const Eigen::MatrixXd& laplacian_matrix) {
  HygieneReport r;
  const auto n = static_cast<Eigen::Index>(decomp.vertex_count());
  if (n == 0) return r;
  auto max_abs = [](const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); };

  Eigen::MatrixXd sum = Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd weighted = Eigen::MatrixXd::Zero(n, n);
  const std::size_t k = decomp.projections.size();
  for (std::size_t a = 0; a < k; ++a) {
    const auto& pa = decomp.projections[a];
    sum += pa;
    weighted += decomp.eigenvalues[a] * pa;
    r.idempotence = std::max(r.idempotence, max_abs(pa * pa - pa));
    for (std::size_t b = a + 1; b < k; ++b) {
      r.cross_product = std::max(r.cross_product, max_abs(pa * decomp.projections[b]));
    }
  }
  r.identity_sum = max_abs(sum - Eigen::MatrixXd::Identity(n, n));
  r.kernel_projection = max_abs(
      decomp.projections.front() -
      Eigen::MatrixXd::Constant(n, n, 1.0 / static_cast<double>(n)));
  r.reconstruction = max_abs(weighted - laplacian_matrix) /
                     (1.0 + max_abs(laplacian_matrix));

  r.heat_min_entry = std::numeric_limits<double>::infinity();
  for (double t : {0.0, 0.1, 1.0, 10.0}) {
    const Eigen::MatrixXd h = heat_kernel(decomp, t);
    r.heat_row_sum = std::max(
        r.heat_row_sum, (h.rowwise().sum().array() - 1.0).abs().maxCoeff());
    r.heat_min_entry = std::min(r.heat_min_entry, h.minCoeff());
    const Eigen::VectorXd diag = h.diagonal();
    r.diagonal_spread = std::max(r.diagonal_spread, diag.maxCoeff() - diag.minCoeff());
  }
  for (auto [s, t] : {std::pair{0.3, 0.7}, std::pair{1.0, 1.0}}) {
    r.semigroup = std::max(r.semigroup, max_abs(heat_kernel(decomp, s + t) -
                                                heat_kernel(decomp, s) *
                                                    heat_kernel(decomp, t)));
  }
  return r;
}

std::vector<double> GridSpec::times() const {
  if (points < 2 || !(t_min > 0.0) || !(t_max > t_min)) {
    throw Error(ErrorCode::InvalidArgument,
                "grid needs 0 < t_min < t_max and at least 2 points");
  }
  std::vector<double> out;
  out.reserve(points + 1);
  if (include_zero) out.push_back(0.0);
  const double log_min = std::log(t_min);
  const double step = (std::log(t_max) - log_min) / static_cast<double>(points - 1);
  for (std::size_t k = 0; k < points; ++k) {
    out.push_back(std::exp(log_min + step * static_cast<double>(k)));
  }
  out.back() = t_max;
  return out;
}

MonotonicityReport monotonicity_scan(const SpectralDecomposition& decomp,
                                     Vertex u, Vertex v, const GridSpec& grid,
                                     double tol) {
  check_pair(decomp, u, v);
  MonotonicityReport report;
  report.u = u;
  report.v = v;
  report.grid = grid.times();

  double raw_min = std::numeric_limits<double>::infinity();
  std::size_t raw_argmin = 0;
  report.min_h = std::numeric_limits<double>::infinity();

  auto record = [&](double t, double h) {
    if (h < -tol) {
      h = recheck(decomp, u, v, t);
      if (h < -tol) report.violations.emplace_back(t, h);
    }
    if (h < report.min_h) {
      report.min_h = h;
      report.argmin_t = t;
    }
  };

  for (std::size_t k = 0; k < report.grid.size(); ++k) {
    const double t = report.grid[k];
    const double h = h_pairwise<double>(decomp, u, v, t);
    if (h < raw_min) {
      raw_min = h;
      raw_argmin = k;
    }
    record(t, h);
  }

  if (raw_min < -tol && raw_min >= -10.0 * tol) {
    report.refined = true;
    const double lo = report.grid[raw_argmin == 0 ? 0 : raw_argmin - 1];
    const double hi =
        report.grid[std::min(raw_argmin + 1, report.grid.size() - 1)];
    constexpr int kRefinePoints = 21;
    report.refined_min_h = std::numeric_limits<double>::infinity();
    for (int k = 0; k < kRefinePoints; ++k) {
      const double t = lo + (hi - lo) * k / (kRefinePoints - 1);
      const double h = recheck(decomp, u, v, t);
      report.refined_min_h = std::min(report.refined_min_h, h);
      record(t, h);
    }
  }

  report.r_at_start = ratio_r(decomp, u, v, report.grid.front());
  report.r_end_error = std::abs(ratio_r(decomp, u, v, report.grid.back()) - 1.0);
  return report;
}

}  // namespace mnhd
