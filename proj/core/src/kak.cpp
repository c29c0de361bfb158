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

#include "kcforge/kak.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace kcforge {

namespace {

const CMat2& axis_pauli(int k) {
  switch (k) {
    case 0: return pauli::X;
    case 1: return pauli::Y;
    default: return pauli::Z;
  }
}

const CMat2 kPhaseGate{1.0, 0.0, 0.0, cplx(0, 1)};
const CMat2 kHadamard{M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2};
// exp(-i pi/4 X)
const CMat2 kRxHalfPi{M_SQRT1_2, cplx(0, -M_SQRT1_2), cplx(0, -M_SQRT1_2), M_SQRT1_2};

cplx i_pow(long n) {
  switch (((n % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

// Invariant: raw = phase * (la (x) lb) * exp[i c.Sigma] * (ra (x) rb).
struct Folding {
  std::array<double, 3> c;
  LocalPair left;
  LocalPair right;
  cplx phase{1.0, 0.0};

  // Rewrites exp[i c.Sigma] = mu * (l) exp[i c'.Sigma] (r).
  void absorb(const CMat2& la, const CMat2& lb, const CMat2& ra,
              const CMat2& rb, cplx mu) {
    left.a = left.a * la;
    left.b = left.b * lb;
    right.a = ra * right.a;
    right.b = rb * right.b;
    phase *= mu;
  }

  // exp(i c PP) = exp(i (c - n pi/2) PP) * i^n (PP)^n
  void shift(int axis, long n) {
    if (n == 0) return;
    c[axis] -= static_cast<double>(n) * kPi / 2.0;
    const CMat2& p = (n % 2 != 0) ? axis_pauli(axis) : pauli::I;
    absorb(pauli::I, pauli::I, p, p, i_pow(n));
  }

  // Conjugation by P_m (x) I negates the two other coefficients.
  void flip(int j, int k) {
    const int m = 3 - j - k;
    c[j] = -c[j];
    c[k] = -c[k];
    absorb(axis_pauli(m), pauli::I, axis_pauli(m), pauli::I, 1.0);
  }

  void swap(int j, int k) {
    if (j > k) std::swap(j, k);
    std::swap(c[j], c[k]);
    if (j == 0 && k == 1) {
      absorb(kPhaseGate.adjoint(), kPhaseGate.adjoint(), kPhaseGate, kPhaseGate, 1.0);
    } else if (j == 1 && k == 2) {
      absorb(kRxHalfPi.adjoint(), kRxHalfPi.adjoint(), kRxHalfPi, kRxHalfPi, 1.0);
    } else {
      absorb(kHadamard, kHadamard, kHadamard, kHadamard, 1.0);
    }
  }
};

CMat2 random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> n01;
  double q[4];
  double norm = 0.0;
  for (double& v : q) {
    v = n01(rng);
    norm += v * v;
  }
  norm = std::sqrt(norm);
  for (double& v : q) v /= norm;
  return CMat2{cplx(q[0], q[3]), cplx(q[2], q[1]), cplx(-q[2], q[1]),
               cplx(q[0], -q[3])};
}

KcDecomposition decompose_once(const CMat4& u, double eps) {
  const cplx d = det(u);
  const cplx ph0 = std::pow(d, 0.25);
  const CMat4 us = u * (1.0 / ph0);
  const CMat4& m = magic_basis();
  const CMat4 um = m.adjoint() * us * m;
  CMat4 s = um.transpose() * um;
  s = 0.5 * (s + s.transpose());

  const auto eig = eig_symmetric_unitary(s, eps);
  std::array<double, 4> th{};
  double sum = 0.0;
  for (std::size_t k = 0; k < 4; ++k) {
    th[k] = 0.5 * std::arg(eig.eigenvalues[k]);
    sum += th[k];
  }
  // det(um) = det(Q) = 1 forces prod e^{i th} = +-1; fix the sign so that
  // the left orthogonal factor lands in SO(4).
  const long parity = std::lround(sum / kPi);
  if (parity % 2 != 0) {
    th[0] += kPi;
    sum += kPi;
  }

  CMat4 half_inv;
  for (std::size_t k = 0; k < 4; ++k) half_inv(k, k) = std::exp(cplx(0, -th[k]));
  const CMat4 q = to_complex(eig.vectors);
  const CMat4 o1 = um * q * half_inv;
  const CMat4 k1 = m * o1 * m.adjoint();
  const CMat4 k2 = m * q.transpose() * m.adjoint();

  const double cx = (th[0] + th[1] - th[2] - th[3]) / 4.0;
  const double cy = (-th[0] + th[1] - th[2] + th[3]) / 4.0;
  const double cz = (th[0] - th[1] - th[2] + th[3]) / 4.0;
  const double g = sum / 4.0;

  const Canonicalization can = canonicalize(cx, cy, cz, eps);
  const auto lf = kron_factor_su2(k1 * can.left.tensor(), eps);
  const auto rf = kron_factor_su2(can.right.tensor() * k2, eps);

  KcDecomposition out;
  out.uA = lf.a;
  out.uB = lf.b;
  out.vA = rf.a;
  out.vB = rf.b;
  out.weyl = can.weyl;
  out.global_phase = ph0 * std::exp(cplx(0, g)) * can.phase * lf.phase * rf.phase;
  return out;
}

}  // namespace

TwoQubitUnitary::TwoQubitUnitary(const CMat4& m, double eps) : m_(m) {
  if (!m.all_finite())
    throw Error(ErrorKind::NotUnitary, "matrix has non-finite entries");
  const double defect = m.unitarity_defect();
  if (defect > eps) {
    std::ostringstream msg;
    msg << "matrix is not unitary: ||U U^dagger - I||_F = " << defect;
    throw Error(ErrorKind::NotUnitary, msg.str());
  }
}

TwoQubitUnitary TwoQubitUnitary::adjoint() const {
  return TwoQubitUnitary(m_.adjoint(), Unchecked{});
}

TwoQubitUnitary operator*(const TwoQubitUnitary& a, const TwoQubitUnitary& b) {
  return TwoQubitUnitary(a.m_ * b.m_, TwoQubitUnitary::Unchecked{});
}

bool WeylPoint::in_chamber(double eps) const {
  if (x > kPi / 4.0 + eps) return false;
  if (y > x + eps) return false;
  if (std::abs(z) > y + eps) return false;
  if (std::abs(x - kPi / 4.0) <= eps && z < -eps) return false;
  return true;
}

std::string_view to_string(GateClass c) {
  switch (c) {
    case GateClass::LocalUnitary: return "LocalUnitary";
    case GateClass::ControlledUnitary: return "ControlledUnitary";
    case GateClass::Matchgate: return "Matchgate";
    case GateClass::GenericSU4: return "GenericSU4";
  }
  return "Unknown";
}

CMat4 canonical_gate(double ax, double ay, double az) {
  const CMat4 id = CMat4::identity();
  auto factor = [&](double a, const CMat2& p) {
    return id * cplx(std::cos(a), 0.0) + kron(p, p) * cplx(0.0, std::sin(a));
  };
  return factor(ax, pauli::X) * factor(ay, pauli::Y) * factor(az, pauli::Z);
}

const CMat4& magic_basis() {
  static const CMat4 m = [] {
    const double r = M_SQRT1_2;
    return CMat4{r,   0.0,         0.0, cplx(0, r),  //
                 0.0, cplx(0, r),  r,   0.0,         //
                 0.0, cplx(0, r),  -r,  0.0,         //
                 r,   0.0,         0.0, cplx(0, -r)};
  }();
  return m;
}

Canonicalization canonicalize(double ax, double ay, double az, double eps) {
  Folding f{{ax, ay, az}, {}, {}, {1.0, 0.0}};

  // Every coefficient into [-pi/4, pi/4].
  for (int k = 0; k < 3; ++k) f.shift(k, std::lround(f.c[k] / (kPi / 2.0)));

  // Descending absolute value.
  for (int pass = 0; pass < 2; ++pass)
    for (int k = 0; k < 2; ++k)
      if (std::abs(f.c[k]) < std::abs(f.c[k + 1])) f.swap(k, k + 1);

  if (f.c[0] < 0.0) f.flip(0, 2);
  if (f.c[1] < 0.0) f.flip(1, 2);

  // On the ax = pi/4 face, (pi/4, y, z) and (pi/4, y, -z) are identified.
  if (std::abs(f.c[0] - kPi / 4.0) <= eps && f.c[2] < 0.0) {
    f.shift(0, 1);
    f.flip(0, 2);
  }

  return Canonicalization{WeylPoint{f.c[0], f.c[1], f.c[2]}, f.left, f.right,
                          f.phase};
}

KcDecomposition decompose(const TwoQubitUnitary& u, double eps) {
  const CMat4& target = u.matrix();
  if (!target.is_unitary(eps)) {
    std::ostringstream msg;
    msg << "matrix is not unitary: ||U U^dagger - I||_F = " << target.unitarity_defect();
    throw Error(ErrorKind::NotUnitary, msg.str());
  }

  constexpr int kAttempts = 6;
  std::string last_failure;
  std::mt19937_64 rng(0x6b63u);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    // Attempts after the first pre-conjugate by random locals, which leaves
    // the Weyl point unchanged but breaks accidental spectral degeneracy.
    LocalPair pre, post;
    if (attempt > 0) {
      pre = {random_su2(rng), random_su2(rng)};
      post = {random_su2(rng), random_su2(rng)};
    }
    try {
      KcDecomposition d =
          decompose_once(pre.tensor() * target * post.tensor(), eps);
      d.uA = pre.a.adjoint() * d.uA;
      d.uB = pre.b.adjoint() * d.uB;
      d.vA = d.vA * post.a.adjoint();
      d.vB = d.vB * post.b.adjoint();
      const double residual = (reconstruct(d).matrix() - target).frobenius_norm();
      if (residual <= 10.0 * eps) return d;
      std::ostringstream msg;
      msg << "reconstruction residual " << residual;
      last_failure = msg.str();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::ConvergenceFailure &&
          e.kind() != ErrorKind::NotProductForm)
        throw;
      last_failure = e.what();
    }
  }
  throw Error(ErrorKind::NumericalDegeneracy,
              "decomposition failed after randomized retries: " + last_failure);
}

TwoQubitUnitary reconstruct(const KcDecomposition& d) {
  const CMat4 m = d.global_phase * kron(d.uA, d.uB) * canonical_gate(d.weyl) *
                  kron(d.vA, d.vB);
  return TwoQubitUnitary(m, 1e-6);
}

KcNumber kc_number(const KcDecomposition& d, double eps_zero) {
  int n = 0;
  for (double a : d.weyl.as_array())
    if (std::abs(a) > eps_zero) ++n;
  return KcNumber{n};
}

KcNumber kc_number(const TwoQubitUnitary& u, double eps_zero) {
  return kc_number(decompose(u), eps_zero);
}

GateClass gate_class_of(KcNumber k) {
  switch (k.value) {
    case 0: return GateClass::LocalUnitary;
    case 1: return GateClass::ControlledUnitary;
    case 2: return GateClass::Matchgate;
    default: return GateClass::GenericSU4;
  }
}

GateClass classify(const KcDecomposition& d, double eps_zero) {
  return gate_class_of(kc_number(d, eps_zero));
}

MakhlinInvariants makhlin_invariants(const TwoQubitUnitary& u) {
  const CMat4& m = magic_basis();
  const CMat4 ub = m.adjoint() * u.matrix() * m;
  const CMat4 w = ub.transpose() * ub;
  const cplx tr = w.trace();
  const cplx tr2 = (w * w).trace();
  const cplx d = det(u.matrix());
  return MakhlinInvariants{tr * tr / (16.0 * d), ((tr * tr - tr2) / (4.0 * d)).real()};
}

std::optional<std::string_view> named_weyl_point(const WeylPoint& w, double tol) {
  const double q = kPi / 4.0;
  auto near = [&](double a, double b) { return std::abs(a - b) <= tol; };
  if (near(w.x, 0) && near(w.y, 0) && near(w.z, 0)) return "identity-class";
  if (near(w.x, q) && near(w.y, 0) && near(w.z, 0)) return "CNOT-class";
  if (near(w.x, q) && near(w.y, q) && near(w.z, 0)) return "iSWAP-class";
  if (near(w.x, q) && near(w.y, q) && near(w.z, q)) return "SWAP-class";
  return std::nullopt;
}

}  // namespace kcforge
