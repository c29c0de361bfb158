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

// Kraus-Cirac decomposition of two-qubit unitaries:
//
//   U = phase * (uA (x) uB) * exp[i (ax XX + ay YY + az ZZ)] * (vA (x) vB)
//
// with (ax, ay, az) folded into the Weyl chamber
//   pi/4 >= ax >= ay >= |az|,  az >= 0 whenever ax == pi/4.
//
// Basis order is |00>, |01>, |10>, |11> with qubit A as the first factor.

#include <array>
#include <compare>
#include <optional>
#include <string_view>

#include "kcforge/error.hpp"
#include "kcforge/matrix.hpp"
#include "kcforge/numkernel.hpp"

namespace kcforge {

/// Threshold below which a canonical angle counts as zero.
inline constexpr double kDefaultZeroAngle = 1e-7;

class TwoQubitUnitary {
 public:
  /// Throws Error(NotUnitary) when ||U U^dagger - I||_F > eps.
  explicit TwoQubitUnitary(const CMat4& m, double eps = kDefaultTolerance);

  static TwoQubitUnitary identity() { return TwoQubitUnitary(CMat4::identity()); }

  const CMat4& matrix() const { return m_; }
  TwoQubitUnitary adjoint() const;

  friend TwoQubitUnitary operator*(const TwoQubitUnitary& a,
                                   const TwoQubitUnitary& b);

 private:
  struct Unchecked {};
  TwoQubitUnitary(const CMat4& m, Unchecked) : m_(m) {}
  CMat4 m_;
};

struct WeylPoint {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  std::array<double, 3> as_array() const { return {x, y, z}; }
  bool in_chamber(double eps = kDefaultTolerance) const;
};

struct LocalPair {
  CMat2 a = CMat2::identity();
  CMat2 b = CMat2::identity();

  CMat4 tensor() const { return kron(a, b); }
};

struct KcDecomposition {
  CMat2 uA = CMat2::identity();
  CMat2 uB = CMat2::identity();
  CMat2 vA = CMat2::identity();
  CMat2 vB = CMat2::identity();
  WeylPoint weyl;
  cplx global_phase{1.0, 0.0};
};

struct KcNumber {
  int value = 0;
  auto operator<=>(const KcNumber&) const = default;
};

enum class GateClass { LocalUnitary, ControlledUnitary, Matchgate, GenericSU4 };

std::string_view to_string(GateClass c);

/// exp[i (ax XX + ay YY + az ZZ)], built from the three commuting factors.
CMat4 canonical_gate(double ax, double ay, double az);
inline CMat4 canonical_gate(const WeylPoint& w) {
  return canonical_gate(w.x, w.y, w.z);
}

/// Magic (Bell-like) basis; its columns diagonalize XX, YY and ZZ, and
/// M^dagger (a (x) b) M is real orthogonal for a, b in SU(2).
const CMat4& magic_basis();

struct Canonicalization {
  WeylPoint weyl;
  LocalPair left;
  LocalPair right;
  cplx phase{1.0, 0.0};
};

/// Folds a raw coefficient triple into the Weyl chamber. The result
/// satisfies
///   exp[i raw.Sigma] = phase * left.tensor() * exp[i weyl.Sigma] * right.tensor()
/// using local Clifford axis permutations, pi/2 shifts and paired sign flips.
Canonicalization canonicalize(double ax, double ay, double az,
                              double eps = kDefaultTolerance);

KcDecomposition decompose(const TwoQubitUnitary& u,
                          double eps = kDefaultTolerance);

TwoQubitUnitary reconstruct(const KcDecomposition& d);

KcNumber kc_number(const KcDecomposition& d, double eps_zero = kDefaultZeroAngle);
KcNumber kc_number(const TwoQubitUnitary& u, double eps_zero = kDefaultZeroAngle);

/// Gate class from the KC number.
GateClass classify(const KcDecomposition& d, double eps_zero = kDefaultZeroAngle);
GateClass gate_class_of(KcNumber k);

struct MakhlinInvariants {
  cplx g1;
  double g2;
};

/// Local-equivalence invariants from the magic-basis trace formula.
MakhlinInvariants makhlin_invariants(const TwoQubitUnitary& u);

/// Human-readable name for well-known Weyl points (CNOT-class etc.).
std::optional<std::string_view> named_weyl_point(const WeylPoint& w,
                                                 double tol = 1e-7);

}  // namespace kcforge
