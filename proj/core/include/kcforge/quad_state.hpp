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

// Pure states of A (x) R_A (x) B (x) R_B, with qubits A, B and reference
// systems of dimension 1..8. Amplitude index ((a d_RA + ra) 2 + b) d_RB + rb,
// so the state is also a (2 d_RA) x (2 d_RB) matrix across AR_A | BR_B.

#include <array>

#include "kcforge/dynmat.hpp"
#include "kcforge/numkernel.hpp"

namespace kcforge {

inline constexpr int kMaxReferenceDim = 8;

enum class Side { A, B };

class QuadState {
 public:
  /// Throws InvalidArgument for reference dimensions outside [1, 8],
  /// DimensionMismatch for a wrong amplitude count and InvalidState if the
  /// norm differs from 1 by more than eps.
  QuadState(int d_ra, int d_rb, CVecX amplitudes, double eps = kDefaultTolerance);

  /// |x>_{AR_A} (x) |y>_{BR_B}; both factors must be normalized.
  static QuadState product(const CVecX& ar_a, int d_ra, const CVecX& br_b,
                           int d_rb, double eps = kDefaultTolerance);

  int d_ra() const { return d_ra_; }
  int d_rb() const { return d_rb_; }
  int d_ar() const { return 2 * d_ra_; }
  int d_br() const { return 2 * d_rb_; }
  const CVecX& amplitudes() const { return amps_; }

  static std::size_t index(int a, int ra, int b, int rb, int d_ra, int d_rb) {
    return static_cast<std::size_t>(((a * d_ra + ra) * 2 + b) * d_rb + rb);
  }

  CMatX marginal_ar_a() const;
  CMatX marginal_br_b() const;

 private:
  int d_ra_;
  int d_rb_;
  CVecX amps_;
};

/// Marginals of an arbitrary (possibly unnormalized) amplitude vector.
CMatX marginal_ar_a(const CVecX& amps, int d_ra, int d_rb);
CMatX marginal_br_b(const CVecX& amps, int d_ra, int d_rb);

/// Applies a 4x4 operator on AB (or 2x2 on A or B) to an amplitude vector.
CVecX apply_ab(const CVecX& amps, int d_ra, int d_rb, const CMat4& u);
CVecX apply_a(const CVecX& amps, int d_ra, int d_rb, const CMat2& g);
CVecX apply_b(const CVecX& amps, int d_ra, int d_rb, const CMat2& g);

/// (|0>|0> + |1>|1>)/sqrt(2) on qubit (x) reference of dimension d_r >= 2.
CVecX maximally_entangled(int d_r);

/// Schmidt decomposition of a pure qubit (x) reference vector:
///   psi = sum_k s_k e_k (x) w_k,  s_0 >= s_1 >= 0.
struct QubitSchmidt {
  std::array<double, 2> coefficients;
  std::array<CVec2, 2> qubit_vectors;
  std::array<CVecX, 2> reference_vectors;
};
QubitSchmidt qubit_schmidt(const CVecX& psi, int d_r);

/// Splits a state that is a product across AR_A | BR_B. Throws InvalidState
/// otherwise.
std::array<CVecX, 2> split_product(const QuadState& s,
                                   double eps = kDefaultTolerance);

/// Second Schmidt coefficients below this count as exact zeros.
inline constexpr double kExactRankZero = 1e-12;

struct ReferenceReduction {
  QuadState reduced;
  /// Linear map on the reduced side's reference, new_dim x old_dim.
  /// Rank 2: J Phi = (|00> + |11>)/sqrt(2). Rank 1: J Phi = e_0 (x) |0>.
  CMatX map;
  int rank;
};

/// Compresses one reference to the qubit's Schmidt rank. Requires that
/// side's qubit+reference pair to be pure. Throws RankDetectionAmbiguous if
/// the second Schmidt coefficient lies in (kExactRankZero, eps].
ReferenceReduction reduce_reference(const QuadState& s, Side side,
                                    double eps = kDefaultTolerance);

}  // namespace kcforge
