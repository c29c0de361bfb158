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

// Controlled-phase factorizations: a unitary with KC number k is a product of
// k locally dressed C_p(theta) = diag(1, 1, 1, e^{i theta}) gates.

#include <vector>

#include "kcforge/kak.hpp"

namespace kcforge {

TwoQubitUnitary build_canonical(double ax, double ay, double az);
TwoQubitUnitary build_canonical(const WeylPoint& w);

CMat4 controlled_phase(double theta);
/// exp(-i phi Y / 2)
CMat2 ry(double phi);

struct ControlledPhaseFactor {
  double theta = 0.0;
  LocalPair left;
  LocalPair right;

  /// left * C_p(theta) * right
  CMat4 matrix() const;
};

struct Factorization {
  /// Applied right to left as written: factors[0] is the leftmost matrix.
  std::vector<ControlledPhaseFactor> factors;
  /// Local part, only non-trivial when there are no factors.
  LocalPair locals;
  cplx global_phase{1.0, 0.0};

  /// global_phase * factors[0] * ... * factors[n-1] * locals
  CMat4 product() const;
};

/// One factor per nonzero canonical angle, theta = 4 alpha. Uses
///   exp(i a ZZ) = e^{-i a} (e^{i a Z} (x) e^{i a Z}) C_p(4a)
/// and basis changes taking Z to X or Y.
Factorization factor_into_controlled(const TwoQubitUnitary& u,
                                     double eps = kDefaultTolerance,
                                     double eps_zero = kDefaultZeroAngle);

/// KC number of C_p(t1) (Ry(p1) (x) Ry(p2)) C_p(t2); at most 2.
KcNumber verify_two_controlled_product(double theta1, double theta2,
                                       double phi1, double phi2,
                                       double eps_zero = kDefaultZeroAngle);

struct CompositionCheck {
  KcNumber ku;
  KcNumber kv;
  KcNumber kuv;
  /// |kU - kV| <= kUV <= kU + kV
  bool bounds_hold;
  /// KC(U) = KC(U^dagger) and KC(V) = KC(V^dagger)
  bool dagger_invariant;

  bool holds() const { return bounds_hold && dagger_invariant; }
};

CompositionCheck check_composition_bounds(const TwoQubitUnitary& u,
                                          const TwoQubitUnitary& v,
                                          double eps_zero = kDefaultZeroAngle);

}  // namespace kcforge
