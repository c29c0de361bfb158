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

#include "kcforge/synth.hpp"
#include "test_util.hpp"

using namespace kcforge;
using namespace kcforge::test;
using Catch::Matchers::WithinAbs;

namespace {

CMat4 cnot_ba() {
  return CMat4{1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 0};
}

// exp(-i phi Y / 2) written out.
CMat2 ry_oracle(double phi) {
  const double c = std::cos(phi / 2), s = std::sin(phi / 2);
  return CMat2{c, -s, s, c};
}

}  // namespace

TEST_CASE("primitive gates") {
  const CMat4 cz = controlled_phase(kPi);
  CHECK((cz - CMat4::diagonal(CVec4{1.0, 1.0, 1.0, -1.0})).frobenius_norm() < 1e-15);
  CHECK((ry(0.7) - ry_oracle(0.7)).frobenius_norm() < 1e-15);
}

TEST_CASE("build canonical gates") {
  CHECK((build_canonical(0, 0, 0).matrix() - CMat4::identity()).frobenius_norm() < 1e-15);
  const CMat4 x = build_canonical(kPi / 4, 0, 0).matrix();
  CHECK((x - exp_pp(kPi / 4, pauli::X)).frobenius_norm() < 1e-15);
  const CMat4 s = build_canonical(WeylPoint{kPi / 4, kPi / 4, kPi / 4}).matrix();
  CHECK(phase_aligned_distance(s, swap_gate()) < 1e-12);
  // Phase of SWAP: exp[i pi/4 (XX + YY + ZZ)] = e^{i pi/4} SWAP.
  CHECK((s - std::polar(1.0, kPi / 4) * swap_gate()).frobenius_norm() < 1e-12);
}

TEST_CASE("factor named gates into controlled phases") {
  SECTION("identity") {
    const auto f = factor_into_controlled(TwoQubitUnitary::identity());
    CHECK(f.factors.empty());
    CHECK((f.product() - CMat4::identity()).frobenius_norm() < 1e-10);
  }
  SECTION("local unitary") {
    std::mt19937_64 rng(79);
    const CMat4 l = kron(random_unitary2(rng), random_unitary2(rng));
    const auto f = factor_into_controlled(TwoQubitUnitary(l));
    CHECK(f.factors.empty());
    CHECK((f.product() - l).frobenius_norm() < 1e-9);
  }
  SECTION("CNOT") {
    const auto f = factor_into_controlled(TwoQubitUnitary(cnot()));
    REQUIRE(f.factors.size() == 1);
    CHECK_THAT(f.factors[0].theta, WithinAbs(kPi, 1e-9));
    CHECK((f.product() - cnot()).frobenius_norm() < 1e-9);
    // Hand identity: CNOT = (I (x) H) C_p(pi) (I (x) H).
    const double h = std::sqrt(0.5);
    const CMat2 had{h, h, h, -h};
    CHECK((kron(pauli::I, had) * controlled_phase(kPi) * kron(pauli::I, had) - cnot()).frobenius_norm() < 1e-15);
  }
  SECTION("two commuting axes") {
    const CMat4 u = exp_pp(0.3, pauli::X) * exp_pp(0.2, pauli::Y);
    const auto f = factor_into_controlled(TwoQubitUnitary(u));
    REQUIRE(f.factors.size() == 2);
    std::array<double, 2> th{f.factors[0].theta, f.factors[1].theta};
    std::sort(th.begin(), th.end());
    CHECK_THAT(th[0], WithinAbs(0.8, 1e-9));
    CHECK_THAT(th[1], WithinAbs(1.2, 1e-9));
    CHECK((f.product() - u).frobenius_norm() < 1e-9);
  }
  SECTION("SWAP needs three") {
    const auto f = factor_into_controlled(TwoQubitUnitary(swap_gate()));
    CHECK(f.factors.size() == 3);
    CHECK((f.product() - swap_gate()).frobenius_norm() < 1e-9);
  }
  SECTION("Haar samples reconstruct") {
    std::mt19937_64 rng(83);
    for (int t = 0; t < 100; ++t) {
      const CMat4 u = random_unitary4(rng);
      const auto f = factor_into_controlled(TwoQubitUnitary(u));
      CHECK(f.factors.size() == 3);
      CHECK((f.product() - u).frobenius_norm() < 1e-8);
    }
  }
}

TEST_CASE("product of two controlled phases") {
  CHECK(verify_two_controlled_product(0, 0, 0.4, 1.1).value == 0);
  CHECK(verify_two_controlled_product(kPi, 0, 0.4, 1.1).value == 1);
  std::mt19937_64 rng(89);
  std::uniform_real_distribution<double> a(-kPi, kPi);
  for (int t = 0; t < 500; ++t) CHECK(verify_two_controlled_product(a(rng), a(rng), a(rng), a(rng)).value <= 2);
}

TEST_CASE("composition bounds") {
  const auto same = check_composition_bounds(TwoQubitUnitary(cnot()), TwoQubitUnitary(cnot()));
  CHECK(same.ku.value == 1);
  CHECK(same.kv.value == 1);
  CHECK(same.kuv.value == 0);
  CHECK(same.holds());

  const auto crossed = check_composition_bounds(TwoQubitUnitary(cnot()), TwoQubitUnitary(cnot_ba()));
  CHECK(crossed.ku.value == 1);
  CHECK(crossed.kv.value == 1);
  CHECK(crossed.kuv.value == 2);
  CHECK(crossed.holds());
  // CNOT(A->B) CNOT(B->A) is locally equivalent to iSWAP.
  const auto w = decompose(TwoQubitUnitary(cnot() * cnot_ba())).weyl;
  CHECK(std::abs(w.x - kPi / 4) + std::abs(w.y - kPi / 4) + std::abs(w.z) < 1e-9);

  std::mt19937_64 rng(97);
  for (int t = 0; t < 100; ++t)
    CHECK(check_composition_bounds(TwoQubitUnitary(random_unitary4(rng)), TwoQubitUnitary(random_unitary4(rng)))
              .holds());
}
