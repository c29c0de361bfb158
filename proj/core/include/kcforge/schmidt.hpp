// Copyright 2026 The kcforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Operator Schmidt decomposition of two-qubit operators:
//   U = sum_k s_k A_k (x) B_k,  Tr(A_j^dagger A_k) = Tr(B_j^dagger B_k) = delta_jk.

#include <array>

#include "kcforge/kak.hpp"

namespace kcforge {

struct OperatorSchmidt {
  std::array<double, 4> coefficients;  // descending
  std::array<CMat2, 4> a_ops;
  std::array<CMat2, 4> b_ops;

  CMat4 reconstruct() const;
};

OperatorSchmidt operator_schmidt(const TwoQubitUnitary& u);

/// Number of coefficients above eps_zero. Unitaries only admit 1, 2 or 4;
/// a count of 3 that survives a 10x looser and 10x tighter threshold
/// raises DegenerateCount.
int operator_schmidt_number(const TwoQubitUnitary& u,
                            double eps_zero = kDefaultZeroAngle);

}  // namespace kcforge
