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

#include "mnhd/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "mnhd/error.hpp"

namespace mnhd {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& a) {
  double sum = 0.0;
  const Eigen::Index n = a.rows();
  for (Eigen::Index p = 0; p < n; ++p) {
    for (Eigen::Index q = p + 1; q < n; ++q) sum += 2.0 * a(p, q) * a(p, q);
  }
  return std::sqrt(sum);
}

}  // namespace

SymmetricEigen jacobi_eigensolver(const Eigen::MatrixXd& input,
                                  const JacobiOptions& options) {
  if (input.rows() != input.cols()) {
    throw Error(ErrorCode::InvalidArgument, "matrix is not square");
  }
  const Eigen::Index n = input.rows();
  Eigen::MatrixXd a = input.selfadjointView<Eigen::Upper>();
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);

  const double threshold = options.relative_threshold * a.norm();
  int sweep = 0;
  for (;; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) break;
    if (sweep >= options.max_sweeps) {
      throw Error(ErrorCode::NoConvergence,
                  "Jacobi did not converge in " +
                      std::to_string(options.max_sweeps) + " sweeps");
    }
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = a(q, p) = 0.0;
        for (Eigen::Index r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = a(p, r) = c * arp - s * arq;
          a(r, q) = a(q, r) = s * arp + c * arq;
        }
        for (Eigen::Index r = 0; r < n; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return a(i, i) < a(j, j);
  });

  SymmetricEigen result;
  result.values.resize(n);
  result.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    result.values(k) = a(order[k], order[k]);
    result.vectors.col(k) = v.col(order[k]);
  }
  result.sweeps = sweep;
  return result;
}

}  // namespace mnhd
