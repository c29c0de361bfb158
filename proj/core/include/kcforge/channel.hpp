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

// Qubit channel induced on A by feeding a fixed B-state through a two-qubit
// unitary and tracing B out:
//   Gamma(rho) = Tr_B[U (rho (x) phi phi^dagger) U^dagger].

#include <array>
#include <optional>
#include <vector>

#include "kcforge/kak.hpp"

namespace kcforge {

/// |phi> = a|0> + b|1>.
class QubitState {
 public:
  /// Throws InvalidState unless |a|^2 + |b|^2 = 1 within eps.
  QubitState(cplx a, cplx b, double eps = kDefaultTolerance);
  explicit QubitState(const CVec2& v, double eps = kDefaultTolerance)
      : QubitState(v[0], v[1], eps) {}

  static QubitState zero() { return {1.0, 0.0}; }
  static QubitState one() { return {0.0, 1.0}; }
  static QubitState plus() { return {M_SQRT1_2, M_SQRT1_2}; }
  static QubitState minus() { return {M_SQRT1_2, -M_SQRT1_2}; }
  /// cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
  static QubitState bloch(double theta, double phi);

  cplx a() const { return a_; }
  cplx b() const { return b_; }
  CVec2 vector() const { return CVec2{a_, b_}; }

 private:
  cplx a_;
  cplx b_;
};

using MeasurementBasis = std::array<CVec2, 2>;

inline MeasurementBasis computational_basis() {
  return {CVec2::basis(0), CVec2::basis(1)};
}
inline MeasurementBasis hadamard_basis() {
  return {QubitState::plus().vector(), QubitState::minus().vector()};
}

struct InducedChannel {
  std::vector<CMat2> kraus;

  CMat2 apply(const CMat2& rho) const;
  /// ||sum K^dagger K - I||_F
  double completeness_defect() const;
};

struct UnitalityMatrix {
  double g11 = 1.0;
  double g22 = 1.0;
  cplx g12{0.0, 0.0};

  CMat2 matrix() const { return CMat2{g11, g12, std::conj(g12), g22}; }
  /// Spectral norm of Gamma(I) - I.
  double deviation() const;
};

/// K_r = (I (x) <m_r|) U (I (x) |phi>). Throws InvalidBasis if the basis is
/// not orthonormal within eps.
InducedChannel induced_kraus(const TwoQubitUnitary& u, const QubitState& phi,
                             const MeasurementBasis& basis,
                             double eps = kDefaultTolerance);

/// Gamma(I) for the canonical gate exp[i w.Sigma] in closed form.
UnitalityMatrix unitality_matrix_closed_form(const WeylPoint& w,
                                             const QubitState& phi);

/// Gamma(I) by explicit partial trace.
UnitalityMatrix unitality_matrix_brute(const TwoQubitUnitary& u,
                                       const QubitState& phi);

struct UnitalInput {
  bool exists = false;
  std::optional<QubitState> witness;
};

/// A unital input exists iff the KC number is at most 2. The witness is
/// |+> for the canonical core, mapped through the right B-side local.
UnitalInput exists_unital_input(const TwoQubitUnitary& u,
                                double eps_zero = kDefaultZeroAngle);

/// Every nonzero Kraus operator proportional to a unitary, cross-checked
/// against unitality of the channel. Throws InconsistentCriteria when the
/// two checks disagree.
bool is_random_unitary_channel(const InducedChannel& ch,
                               double eps = kDefaultTolerance);

struct UnitalitySearch {
  double min_deviation;
  QubitState best{QubitState::zero()};
};

/// min over phi of ||Gamma(I) - I|| on a Bloch-sphere grid followed by
/// coordinate-descent refinement.
UnitalitySearch minimize_unitality_deviation(const TwoQubitUnitary& u,
                                             int grid = 64,
                                             int refine_steps = 20);

}  // namespace kcforge
