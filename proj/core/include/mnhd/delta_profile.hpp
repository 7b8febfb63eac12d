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

#ifndef MNHD_DELTA_PROFILE_HPP
#define MNHD_DELTA_PROFILE_HPP

#include <stdexcept>

namespace mnhd {

/// The six projector combinations that drive h_{u,v}(t) for a regular
/// graph with three non-zero Laplacian eigenvalues:
///   delta_i  = P_i(u,u) - P_i(u,v)
///   delta_ij = P_i(u,v) P_j(u,u) - P_j(u,v) P_i(u,u)
/// Only i < j is stored; delta_ji = -delta_ij.
template <class T>
struct DeltaProfile {
  T delta1{};
  T delta2{};
  T delta3{};
  T delta12{};
  T delta13{};
  T delta23{};

  const T& single(int i) const {
    switch (i) {
      case 1: return delta1;
      case 2: return delta2;
      case 3: return delta3;
    }
    throw std::out_of_range("delta index must be 1, 2 or 3");
  }

  /// Signed delta_ij for any i != j in {1, 2, 3}.
  T pair(int i, int j) const {
    if (i > j) return T(-pair(j, i));
    if (i == 1 && j == 2) return delta12;
    if (i == 1 && j == 3) return delta13;
    if (i == 2 && j == 3) return delta23;
    throw std::out_of_range("delta pair needs distinct indices in 1..3");
  }

  bool operator==(const DeltaProfile&) const = default;
};

}  // namespace mnhd

#endif  // MNHD_DELTA_PROFILE_HPP
