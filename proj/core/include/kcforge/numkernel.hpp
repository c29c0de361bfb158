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

#include <array>

#include "kcforge/error.hpp"
#include "kcforge/matrix.hpp"

namespace kcforge {

/// Default absolute tolerance on Frobenius norms of O(1) 4x4 matrices.
inline constexpr double kDefaultTolerance = 1e-9;

namespace pauli {
inline const CMat2 I{1.0, 0.0, 0.0, 1.0};
inline const CMat2 X{0.0, 1.0, 1.0, 0.0};
inline const CMat2 Y{0.0, cplx(0, -1), cplx(0, 1), 0.0};
inline const CMat2 Z{1.0, 0.0, 0.0, -1.0};
}  // namespace pauli

/// Eigen-decomposition of a real symmetric matrix by cyclic Jacobi.
/// Columns of `vectors` are eigenvectors; eigenvalues ascending.
template <std::size_t N>
struct RealSymEig {
  std::array<double, N> values;
  RMat<N> vectors;
};

RealSymEig<4> eig_real_symmetric(const RMat4& a);
RealSymEig<2> eig_real_symmetric(const RMat<2>& a);
RealSymEig<3> eig_real_symmetric(const RMat<3>& a);

struct SymmetricUnitaryEig {
  std::array<cplx, 4> eigenvalues;
  /// Real orthogonal, det +1; S = Q diag(eigenvalues) Q^T.
  RMat4 vectors;
};

/// Eigendecomposition of a complex symmetric unitary matrix with a real
/// orthogonal eigenbasis. Re(S) and Im(S) commute; they are diagonalized
/// jointly, with near-degenerate clusters of Re(S) resolved by a second
/// diagonalization restricted to the cluster.
SymmetricUnitaryEig eig_symmetric_unitary(const CMat4& s,
                                          double eps = kDefaultTolerance);

struct KronFactors {
  CMat2 a;
  CMat2 b;
  cplx phase;
};

/// Rearranges G so that a Kronecker product a (x) b becomes the rank-1
/// matrix vec(a) vec(b)^T.
CMat4 reshuffle(const CMat4& g);

/// Factor G = phase * (a (x) b) with det a = det b = 1.
KronFactors kron_factor_su2(const CMat4& g, double eps = kDefaultTolerance);

struct Svd4 {
  std::array<double, 4> singular_values;  // descending
  CMat4 u;
  CMat4 v;  // M = u diag(s) v^dagger
};

/// Complex 4x4 SVD by one-sided (Hestenes) Jacobi.
Svd4 svd4(const CMat4& m);

/// Principal square root normalized so det(u / sqrt(det u)) = 1.
CMat2 to_special_unitary(const CMat2& u);

}  // namespace kcforge
