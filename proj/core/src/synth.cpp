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

#include "kcforge/synth.hpp"

#include <cmath>
#include <cstdlib>

namespace kcforge {

namespace {

const CMat2 kH{M_SQRT1_2, M_SQRT1_2, M_SQRT1_2, -M_SQRT1_2};
const CMat2 kS{1.0, 0.0, 0.0, cplx(0, 1)};

// G Z G^dagger = P for axis P.
CMat2 axis_change(int axis) {
  switch (axis) {
    case 0: return kH;
    case 1: return kS * kH;
    default: return CMat2::identity();
  }
}

CMat2 z_rotation(double a) {
  return CMat2{std::exp(cplx(0, a)), 0.0, 0.0, std::exp(cplx(0, -a))};
}

}  // namespace

TwoQubitUnitary build_canonical(double ax, double ay, double az) {
  return TwoQubitUnitary(canonical_gate(ax, ay, az));
}

TwoQubitUnitary build_canonical(const WeylPoint& w) { return build_canonical(w.x, w.y, w.z); }

CMat4 controlled_phase(double theta) {
  CMat4 m = CMat4::identity();
  m(3, 3) = std::exp(cplx(0, theta));
  return m;
}

CMat2 ry(double phi) {
  const double c = std::cos(phi / 2.0), s = std::sin(phi / 2.0);
  return CMat2{c, -s, s, c};
}

CMat4 ControlledPhaseFactor::matrix() const {
  return left.tensor() * controlled_phase(theta) * right.tensor();
}

CMat4 Factorization::product() const {
  CMat4 m = CMat4::identity();
  for (const auto& f : factors) m = m * f.matrix();
  return global_phase * m * locals.tensor();
}

Factorization factor_into_controlled(const TwoQubitUnitary& u, double eps,
                                     double eps_zero) {
  const KcDecomposition d = decompose(u, eps);
  Factorization out;
  out.global_phase = d.global_phase;
  const auto angles = d.weyl.as_array();
  for (int axis = 0; axis < 3; ++axis) {
    const double a = angles[static_cast<std::size_t>(axis)];
    if (std::abs(a) <= eps_zero) continue;
    const CMat2 g = axis_change(axis);
    const CMat2 lz = g * z_rotation(a);
    ControlledPhaseFactor f;
    f.theta = 4.0 * a;
    f.left = {lz, lz};
    f.right = {g.adjoint(), g.adjoint()};
    out.factors.push_back(f);
    out.global_phase *= std::exp(cplx(0, -a));
  }
  if (out.factors.empty()) {
    out.locals = {d.uA * d.vA, d.uB * d.vB};
    return out;
  }
  auto& first = out.factors.front();
  first.left = {d.uA * first.left.a, d.uB * first.left.b};
  auto& last = out.factors.back();
  last.right = {last.right.a * d.vA, last.right.b * d.vB};
  return out;
}

KcNumber verify_two_controlled_product(double theta1, double theta2, double phi1,
                                       double phi2, double eps_zero) {
  const CMat4 w =
      controlled_phase(theta1) * kron(ry(phi1), ry(phi2)) * controlled_phase(theta2);
  return kc_number(TwoQubitUnitary(w), eps_zero);
}

CompositionCheck check_composition_bounds(const TwoQubitUnitary& u,
                                          const TwoQubitUnitary& v,
                                          double eps_zero) {
  CompositionCheck c;
  c.ku = kc_number(u, eps_zero);
  c.kv = kc_number(v, eps_zero);
  c.kuv = kc_number(u * v, eps_zero);
  c.bounds_hold = std::abs(c.ku.value - c.kv.value) <= c.kuv.value &&
                  c.kuv.value <= c.ku.value + c.kv.value;
  c.dagger_invariant = kc_number(u.adjoint(), eps_zero) == c.ku &&
                       kc_number(v.adjoint(), eps_zero) == c.kv;
  return c;
}

}  // namespace kcforge
