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

#include "kcforge/channel.hpp"

#include <cmath>
#include <sstream>

namespace kcforge {

namespace {

double hermitian_spectral_norm(const CMat2& h) {
  const double p = 0.5 * (h(0, 0).real() + h(1, 1).real());
  const double q = 0.5 * (h(0, 0).real() - h(1, 1).real());
  const double r = std::sqrt(q * q + std::norm(h(0, 1)));
  return std::max(std::abs(p + r), std::abs(p - r));
}

}  // namespace

QubitState::QubitState(cplx a, cplx b, double eps) : a_(a), b_(b) {
  const double n = std::norm(a) + std::norm(b);
  if (!std::isfinite(n) || std::abs(n - 1.0) > eps) {
    std::ostringstream msg;
    msg << "qubit state is not normalized: |a|^2 + |b|^2 = " << n;
    throw Error(ErrorKind::InvalidState, msg.str());
  }
}

QubitState QubitState::bloch(double theta, double phi) {
  return {std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), phi)};
}

CMat2 InducedChannel::apply(const CMat2& rho) const {
  CMat2 out;
  for (const auto& k : kraus) out += k * rho * k.adjoint();
  return out;
}

double InducedChannel::completeness_defect() const {
  CMat2 s;
  for (const auto& k : kraus) s += k.adjoint() * k;
  return (s - CMat2::identity()).frobenius_norm();
}

double UnitalityMatrix::deviation() const {
  return hermitian_spectral_norm(matrix() - CMat2::identity());
}

InducedChannel induced_kraus(const TwoQubitUnitary& u, const QubitState& phi,
                             const MeasurementBasis& basis, double eps) {
  CMat2 gram;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) gram(i, j) = inner(basis[i], basis[j]);
  if ((gram - CMat2::identity()).frobenius_norm() > eps) {
    std::ostringstream msg;
    msg << "measurement basis is not orthonormal: ||G - I||_F = "
        << (gram - CMat2::identity()).frobenius_norm();
    throw Error(ErrorKind::InvalidBasis, msg.str());
  }
  const CMat4& m = u.matrix();
  const CVec2 f = phi.vector();
  InducedChannel ch;
  for (const auto& mr : basis) {
    CMat2 k;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        cplx s{};
        for (std::size_t b = 0; b < 2; ++b)
          for (std::size_t l = 0; l < 2; ++l)
            s += std::conj(mr[b]) * m(i * 2 + b, j * 2 + l) * f[l];
        k(i, j) = s;
      }
    ch.kraus.push_back(k);
  }
  return ch;
}

UnitalityMatrix unitality_matrix_closed_form(const WeylPoint& w,
                                             const QubitState& phi) {
  // Written for exp[+i w.Sigma]; the YY coefficient enters with the sign
  // opposite to the exp[-i ...] form of the same expression.
  const double sx = std::sin(2.0 * w.x);
  const double sy = std::sin(-2.0 * w.y);
  const double sz = std::sin(2.0 * w.z);
  const cplx a = phi.a();
  const cplx b = phi.b();
  UnitalityMatrix g;
  g.g11 = 1.0 + (std::norm(b) - std::norm(a)) * sx * sy;
  g.g22 = 2.0 - g.g11;
  g.g12 = -(a * std::conj(b) * (sy - sx) + b * std::conj(a) * (sx + sy)) * sz;
  return g;
}

UnitalityMatrix unitality_matrix_brute(const TwoQubitUnitary& u,
                                       const QubitState& phi) {
  const CVec2 f = phi.vector();
  const CMat4 in = kron(CMat2::identity(), CMat2::outer(f, f));
  const CMat4 out = u.matrix() * in * u.matrix().adjoint();
  CMat2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      r(i, j) = out(i * 2, j * 2) + out(i * 2 + 1, j * 2 + 1);
  UnitalityMatrix g;
  g.g11 = r(0, 0).real();
  g.g22 = r(1, 1).real();
  g.g12 = 0.5 * (r(0, 1) + std::conj(r(1, 0)));
  return g;
}

UnitalInput exists_unital_input(const TwoQubitUnitary& u, double eps_zero) {
  const KcDecomposition d = decompose(u);
  if (kc_number(d, eps_zero).value > 2) return {};
  if (kc_number(d, eps_zero).value == 0) return {true, QubitState::zero()};
  // Gamma_U(I) = uA Gamma_core(vB phi)(I) uA^dagger, and the core with
  // az = 0 is unital on |+>.
  const CVec2 w = d.vB.adjoint() * QubitState::plus().vector();
  return {true, QubitState(w.normalized())};
}

bool is_random_unitary_channel(const InducedChannel& ch, double eps) {
  bool proportional = true;
  for (const auto& k : ch.kraus) {
    const CMat2 kk = k.adjoint() * k;
    const cplx mean = 0.5 * kk.trace();
    if ((kk - CMat2::identity() * mean).frobenius_norm() > eps) proportional = false;
  }
  const CMat2 image = ch.apply(CMat2::identity());
  const bool unital = (image - CMat2::identity()).frobenius_norm() <= eps;
  if (proportional != unital) {
    std::ostringstream msg;
    msg << "random-unitary criteria disagree: Kraus operators "
        << (proportional ? "are" : "are not")
        << " proportional to unitaries but the channel "
        << (unital ? "is" : "is not") << " unital (||Gamma(I) - I||_F = "
        << (image - CMat2::identity()).frobenius_norm() << ")";
    throw Error(ErrorKind::InconsistentCriteria, msg.str());
  }
  return proportional;
}

UnitalitySearch minimize_unitality_deviation(const TwoQubitUnitary& u,
                                             int grid, int refine_steps) {
  auto cost = [&](double th, double ph) {
    return unitality_matrix_brute(u, QubitState::bloch(th, ph)).deviation();
  };
  double best_th = 0.0, best_ph = 0.0;
  double best = cost(0.0, 0.0);
  for (int i = 0; i < grid; ++i) {
    const double th = kPi * (i + 0.5) / grid;
    for (int j = 0; j < grid; ++j) {
      const double ph = 2.0 * kPi * j / grid;
      const double c = cost(th, ph);
      if (c < best) {
        best = c;
        best_th = th;
        best_ph = ph;
      }
    }
  }
  double step_th = kPi / grid;
  double step_ph = 2.0 * kPi / grid;
  for (int s = 0; s < refine_steps; ++s) {
    bool moved = false;
    for (double dt : {-step_th, step_th}) {
      const double c = cost(best_th + dt, best_ph);
      if (c < best) {
        best = c;
        best_th += dt;
        moved = true;
      }
    }
    for (double dp : {-step_ph, step_ph}) {
      const double c = cost(best_th, best_ph + dp);
      if (c < best) {
        best = c;
        best_ph += dp;
        moved = true;
      }
    }
    if (!moved) {
      step_th *= 0.5;
      step_ph *= 0.5;
    }
  }
  return {best, QubitState::bloch(best_th, best_ph)};
}

}  // namespace kcforge
