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

#include <catch_amalgamated.hpp>

#include "kcforge/kak.hpp"
#include "test_util.hpp"

using namespace kcforge;
using namespace kcforge::test;
using Catch::Matchers::WithinAbs;

namespace {

// Direct evaluation of exp[i(ax XX + ay YY + az ZZ)]: the three terms commute.
CMat4 canonical_oracle(double ax, double ay, double az) {
  return exp_pp(ax, pauli::X) * exp_pp(ay, pauli::Y) * exp_pp(az, pauli::Z);
}

// Local invariants computed with Eigen from the magic-basis trace formula.
std::pair<std::complex<double>, double> makhlin_oracle(const CMat4& u) {
  const double r = 1.0 / std::sqrt(2.0);
  const std::complex<double> i{0, 1};
  Eigen::Matrix4cd m;
  m << r, 0, 0, i * r, 0, i * r, r, 0, 0, i * r, -r, 0, r, 0, 0, -i * r;
  const Eigen::Matrix4cd ue = to_eigen<4>(u);
  const Eigen::Matrix4cd ub = m.adjoint() * ue * m;
  const Eigen::Matrix4cd mm = ub.transpose() * ub;
  const std::complex<double> d = ue.determinant();
  const std::complex<double> tr = mm.trace();
  const std::complex<double> g1 = tr * tr / (16.0 * d);
  const std::complex<double> g2 = (tr * tr - (mm * mm).trace()) / (4.0 * d);
  return {g1, g2.real()};
}

bool same_weyl(const WeylPoint& a, const WeylPoint& b, double tol) {
  return std::abs(a.x - b.x) < tol && std::abs(a.y - b.y) < tol && std::abs(a.z - b.z) < tol;
}

}  // namespace

TEST_CASE("canonical_gate matches the direct exponential") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> a(-2.0, 2.0);
  for (int t = 0; t < 50; ++t) {
    const double x = a(rng), y = a(rng), z = a(rng);
    CHECK((canonical_gate(x, y, z) - canonical_oracle(x, y, z)).frobenius_norm() < 1e-13);
  }
  const CMat4 c = canonical_gate(kPi / 4, 0, 0);
  const double h = std::sqrt(0.5);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK(std::abs(c(k, k) - h) < 1e-15);
    CHECK(std::abs(c(k, 3 - k) - cplx(0, h)) < 1e-15);
  }
}

TEST_CASE("magic basis is unitary") {
  CHECK(magic_basis().is_unitary(1e-14));
}

TEST_CASE("decompose the identity") {
  const auto d = decompose(TwoQubitUnitary::identity());
  CHECK(same_weyl(d.weyl, {0, 0, 0}, 1e-12));
  CHECK((reconstruct(d).matrix() - CMat4::identity()).frobenius_norm() < 1e-12);
  // Locals are I up to the global phase.
  CHECK(phase_aligned_distance(d.uA * d.vA, CMat2::identity()) < 1e-10);
  CHECK(phase_aligned_distance(d.uB * d.vB, CMat2::identity()) < 1e-10);
}

TEST_CASE("decompose a gate already in canonical form") {
  const CMat4 g = canonical_oracle(0.3, 0.2, 0.1);
  const auto d = decompose(TwoQubitUnitary(g));
  CHECK(same_weyl(d.weyl, {0.3, 0.2, 0.1}, 1e-10));
  CHECK((reconstruct(d).matrix() - g).frobenius_norm() < 1e-10);
}

TEST_CASE("decompose named gates") {
  const auto c = decompose(TwoQubitUnitary(cnot()));
  CHECK(same_weyl(c.weyl, {kPi / 4, 0, 0}, 1e-10));
  CHECK((reconstruct(c).matrix() - cnot()).frobenius_norm() < 1e-9);
  const auto mc = makhlin_invariants(TwoQubitUnitary(cnot()));
  const auto mx = makhlin_invariants(TwoQubitUnitary(canonical_oracle(kPi / 4, 0, 0)));
  CHECK(std::abs(mc.g1 - mx.g1) < 1e-12);
  CHECK_THAT(mc.g2, WithinAbs(mx.g2, 1e-12));

  const auto s = decompose(TwoQubitUnitary(swap_gate()));
  CHECK(same_weyl(s.weyl, {kPi / 4, kPi / 4, kPi / 4}, 1e-10));
  CHECK((reconstruct(s).matrix() - swap_gate()).frobenius_norm() < 1e-9);

  const auto w = decompose(TwoQubitUnitary(iswap()));
  CHECK(same_weyl(w.weyl, {kPi / 4, kPi / 4, 0}, 1e-10));
  CHECK(named_weyl_point(w.weyl) == std::optional<std::string_view>("iSWAP-class"));
}

TEST_CASE("decompose round trip on Haar samples") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 300; ++t) {
    const CMat4 u = random_unitary4(rng);
    const auto d = decompose(TwoQubitUnitary(u));
    CHECK(d.weyl.in_chamber());
    CHECK((reconstruct(d).matrix() - u).frobenius_norm() < 1e-9);
    for (const CMat2* l : {&d.uA, &d.uB, &d.vA, &d.vB}) CHECK(l->is_unitary(1e-10));
  }
}

TEST_CASE("decompose rejects a non-unitary matrix") {
  CMat4 m = CMat4::identity();
  m(3, 3) = 2.0;
  KCF_CHECK_THROWS_KIND(decompose(TwoQubitUnitary(m, 1e3)), ErrorKind::NotUnitary);
  KCF_CHECK_THROWS_KIND(TwoQubitUnitary(m), ErrorKind::NotUnitary);
}

TEST_CASE("canonicalize folds into the chamber") {
  SECTION("already canonical") {
    const auto c = canonicalize(0.3, 0.2, 0.1);
    CHECK(same_weyl(c.weyl, {0.3, 0.2, 0.1}, 1e-15));
    CHECK((c.left.tensor() - CMat4::identity()).frobenius_norm() < 1e-15);
    CHECK((c.right.tensor() - CMat4::identity()).frobenius_norm() < 1e-15);
  }
  SECTION("axis permutation") {
    const auto c = canonicalize(0.1, 0.2, 0.3);
    CHECK(same_weyl(c.weyl, {0.3, 0.2, 0.1}, 1e-15));
    const CMat4 back = c.phase * c.left.tensor() * canonical_oracle(0.3, 0.2, 0.1) * c.right.tensor();
    CHECK((back - canonical_oracle(0.1, 0.2, 0.3)).frobenius_norm() < 1e-12);
  }
  SECTION("shift by pi/2 extracts X(x)X") {
    const auto c = canonicalize(kPi / 2, 0, 0);
    CHECK(same_weyl(c.weyl, {0, 0, 0}, 1e-15));
    CHECK((canonical_oracle(kPi / 2, 0, 0) - cplx(0, 1) * kron(pauli::X, pauli::X)).frobenius_norm() < 1e-15);
    const CMat4 dressing = c.phase * c.left.tensor() * c.right.tensor();
    CHECK((dressing - cplx(0, 1) * kron(pauli::X, pauli::X)).frobenius_norm() < 1e-12);
  }
  SECTION("random triples") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> a(-4.0, 4.0);
    for (int t = 0; t < 500; ++t) {
      const double x = a(rng), y = a(rng), z = a(rng);
      const auto c = canonicalize(x, y, z);
      CHECK(c.weyl.in_chamber());
      const CMat4 back = c.phase * c.left.tensor() * canonical_oracle(c.weyl.x, c.weyl.y, c.weyl.z) *
                         c.right.tensor();
      CHECK((back - canonical_oracle(x, y, z)).frobenius_norm() < 1e-12);
    }
  }
}

TEST_CASE("chamber membership") {
  CHECK(WeylPoint{0, 0, 0}.in_chamber());
  CHECK(WeylPoint{kPi / 4, kPi / 4, kPi / 4}.in_chamber());
  CHECK(WeylPoint{0.3, 0.2, -0.1}.in_chamber());
  CHECK_FALSE(WeylPoint{0.2, 0.3, 0.1}.in_chamber());
  CHECK_FALSE(WeylPoint{0.9, 0.1, 0.0}.in_chamber());
  CHECK_FALSE(WeylPoint{kPi / 4, 0.2, -0.1}.in_chamber());
}

TEST_CASE("KC number and gate class") {
  CHECK(kc_number(TwoQubitUnitary::identity()).value == 0);
  CHECK(kc_number(TwoQubitUnitary(cnot())).value == 1);
  CHECK(kc_number(TwoQubitUnitary(iswap())).value == 2);
  CHECK(kc_number(TwoQubitUnitary(swap_gate())).value == 3);

  CHECK(classify(decompose(TwoQubitUnitary::identity())) == GateClass::LocalUnitary);
  CHECK(classify(decompose(TwoQubitUnitary(cnot()))) == GateClass::ControlledUnitary);
  CHECK(classify(decompose(TwoQubitUnitary(iswap()))) == GateClass::Matchgate);
  CHECK(classify(decompose(TwoQubitUnitary(swap_gate()))) == GateClass::GenericSU4);

  for (int k = 0; k < 4; ++k) CHECK(static_cast<int>(gate_class_of(KcNumber{k})) == k);
}

TEST_CASE("Makhlin invariants of named gates") {
  const auto i = makhlin_invariants(TwoQubitUnitary::identity());
  CHECK(std::abs(i.g1 - 1.0) < 1e-12);
  CHECK_THAT(i.g2, WithinAbs(3.0, 1e-12));
  const auto c = makhlin_invariants(TwoQubitUnitary(cnot()));
  CHECK(std::abs(c.g1) < 1e-12);
  CHECK_THAT(c.g2, WithinAbs(1.0, 1e-12));
  const auto s = makhlin_invariants(TwoQubitUnitary(swap_gate()));
  CHECK(std::abs(s.g1 + 1.0) < 1e-12);
  CHECK_THAT(s.g2, WithinAbs(-3.0, 1e-12));
}

TEST_CASE("Makhlin invariants agree with the Eigen oracle and the Weyl formula") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 200; ++t) {
    const CMat4 u = random_unitary4(rng);
    const auto mine = makhlin_invariants(TwoQubitUnitary(u));
    const auto [g1, g2] = makhlin_oracle(u);
    CHECK(std::abs(mine.g1 - g1) < 1e-10);
    CHECK_THAT(mine.g2, WithinAbs(g2, 1e-10));

    // Closed form in the doubled angles c_k = 2 alpha_k.
    const auto w = decompose(TwoQubitUnitary(u)).weyl;
    const double c1 = 2 * w.x, c2 = 2 * w.y, c3 = 2 * w.z;
    const double cc = std::pow(std::cos(c1) * std::cos(c2) * std::cos(c3), 2);
    const double ss = std::pow(std::sin(c1) * std::sin(c2) * std::sin(c3), 2);
    const double im = 0.25 * std::sin(2 * c1) * std::sin(2 * c2) * std::sin(2 * c3);
    CHECK_THAT(mine.g1.real(), WithinAbs(cc - ss, 1e-9));
    CHECK_THAT(std::abs(mine.g1.imag()), WithinAbs(std::abs(im), 1e-9));
    CHECK_THAT(mine.g2, WithinAbs(4 * cc - 4 * ss - std::cos(2 * c1) * std::cos(2 * c2) * std::cos(2 * c3), 1e-9));
  }
}

TEST_CASE("adjoint and product of two-qubit unitaries") {
  std::mt19937_64 rng(37);
  const TwoQubitUnitary u(random_unitary4(rng));
  const TwoQubitUnitary v(random_unitary4(rng));
  CHECK(((u * u.adjoint()).matrix() - CMat4::identity()).frobenius_norm() < 1e-12);
  CHECK(((u * v).matrix() - u.matrix() * v.matrix()).frobenius_norm() < 1e-14);
}
