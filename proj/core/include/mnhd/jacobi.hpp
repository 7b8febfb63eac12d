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

#ifndef MNHD_JACOBI_HPP
#define MNHD_JACOBI_HPP

#include <Eigen/Dense>

namespace mnhd {

struct JacobiOptions {
  int max_sweeps = 100;
  // Converged once the off-diagonal Frobenius norm drops to this fraction
  // of the full Frobenius norm.
  double relative_threshold = 1e-12;
};

struct SymmetricEigen {
  Eigen::VectorXd values;   // ascending
  Eigen::MatrixXd vectors;  // orthonormal columns, same order as values
  int sweeps = 0;
};

/// Cyclic Jacobi rotations on a symmetric matrix. Only the upper triangle
/// is trusted. Throws Error(NoConvergence) past max_sweeps.
SymmetricEigen jacobi_eigensolver(const Eigen::MatrixXd& a,
                                  const JacobiOptions& options = {});

}  // namespace mnhd

#endif  // MNHD_JACOBI_HPP
