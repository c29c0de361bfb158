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

#include <algorithm>
#include <catch_amalgamated.hpp>

#include "kcforge/dynmat.hpp"
#include "kcforge/numkernel.hpp"
#include "test_util.hpp"

using namespace kcforge;
using namespace kcforge::test;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<double> sorted_args(const std::array<cplx, 4>& z) {
  std::vector<double> a;
  for (const auto& v : z) a.push_back(std::arg(v));
  std::sort(a.begin(), a.end());
  return a;
}

void check_symmetric_eig(const CMat4& s, const SymmetricUnitaryEig& e, double tol) {
  const CMat4 q = to_complex(e.vectors);
  CHECK((q.transpose() * q - CMat4::identity()).frobenius_norm() < tol);
  CHECK_THAT(det(e.vectors), WithinAbs(1.0, tol));
  const CMat4 d = q.transpose() * s * q;
  double off = 0.0;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) off += std::norm(d(i, j));
  CHECK(std::sqrt(off) < tol);
  for (std::size_t k = 0; k < 4; ++k) {
    CHECK_THAT(std::abs(e.eigenvalues[k]), WithinAbs(1.0, tol));
    CHECK(std::abs(d(k, k) - e.eigenvalues[k]) < tol);
  }
}

}  // namespace

TEST_CASE("eig_symmetric_unitary on identity and diagonal input") {
  const auto e = eig_symmetric_unitary(CMat4::identity());
  for (const auto& v : e.eigenvalues) CHECK(std::abs(v - 1.0) < 1e-14);
  check_symmetric_eig(CMat4::identity(), e, 1e-12);

  const cplx i{0, 1};
  const CMat4 s = CMat4::diagonal(CVec4{1.0, i, i, -1.0});
  const auto d = eig_symmetric_unitary(s);
  check_symmetric_eig(s, d, 1e-12);
  // Q is a signed permutation.
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) {
      const double v = std::abs(d.vectors(r, c));
      CHECK((v < 1e-12 || std::abs(v - 1.0) < 1e-12));
    }
}

TEST_CASE("eig_symmetric_unitary recovers constructed spectra") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ang(-kPi, kPi);
  for (int t = 0; t < 300; ++t) {
    const Eigen::Matrix4d q0 = eigen_random_orthogonal<4>(rng);
    std::array<cplx, 4> d;
    for (auto& v : d) v = std::polar(1.0, ang(rng));
    // Force degenerate clusters in a third of the cases.
    if (t % 3 == 1) d[1] = d[0];
    if (t % 3 == 2) {
      d[1] = d[0];
      d[3] = d[2];
    }
    Eigen::Matrix4cd s = q0.cast<std::complex<double>>() *
                         Eigen::Vector4cd(d[0], d[1], d[2], d[3]).asDiagonal() *
                         q0.transpose().cast<std::complex<double>>();
    const CMat4 sm = from_eigen<4>(s);
    const auto e = eig_symmetric_unitary(sm);
    check_symmetric_eig(sm, e, 1e-12);
    const auto want = sorted_args(d);
    const auto got = sorted_args(e.eigenvalues);
    for (std::size_t k = 0; k < 4; ++k) CHECK_THAT(got[k], WithinAbs(want[k], 1e-10));
  }
}

TEST_CASE("eig_symmetric_unitary validates its input") {
  CMat4 s = CMat4::identity();
  s(0, 1) = 0.5;
  KCF_CHECK_THROWS_KIND(eig_symmetric_unitary(s), ErrorKind::NotSymmetric);
  KCF_CHECK_THROWS_KIND(eig_symmetric_unitary(CMat4::identity() * cplx(2.0, 0.0)), ErrorKind::NotUnitary);
}

TEST_CASE("eig_real_symmetric agrees with Eigen") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n;
  for (int t = 0; t < 100; ++t) {
    Eigen::Matrix4d a;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = n(rng);
    RMat4 m;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = a(static_cast<int>(i), static_cast<int>(j));
    const auto mine = eig_real_symmetric(m);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> oracle(a);
    for (int k = 0; k < 4; ++k)
      CHECK_THAT(mine.values[static_cast<std::size_t>(k)], WithinAbs(oracle.eigenvalues()(k), 1e-12));
  }
}

TEST_CASE("kron_factor_su2 recovers product factors") {
  const auto id = kron_factor_su2(CMat4::identity());
  CHECK((id.a - CMat2::identity()).frobenius_norm() + (id.b - CMat2::identity()).frobenius_norm() < 1e-12);
  CHECK(std::abs(id.phase - 1.0) < 1e-12);

  const CMat4 xz = kron(pauli::X, pauli::Z);
  const auto f = kron_factor_su2(xz);
  CHECK((f.phase * kron(f.a, f.b) - xz).frobenius_norm() < 1e-12);
  CHECK(std::abs(det(f.a) - 1.0) < 1e-12);
  CHECK(std::abs(det(f.b) - 1.0) < 1e-12);

  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ang(0, 2 * kPi);
  for (int t = 0; t < 500; ++t) {
    const CMat4 g = std::polar(1.0, ang(rng)) * kron(random_unitary2(rng), random_unitary2(rng));
    const auto k = kron_factor_su2(g);
    CHECK((k.phase * kron(k.a, k.b) - g).frobenius_norm() < 1e-12);
    CHECK(std::abs(det(k.a) - 1.0) < 1e-12);
    CHECK(std::abs(det(k.b) - 1.0) < 1e-12);
    CHECK(k.a.is_unitary(1e-12));
  }

  KCF_CHECK_THROWS_KIND(kron_factor_su2(cnot()), ErrorKind::NotProductForm);
}

TEST_CASE("svd4 trivial cases") {
  const auto z = svd4(CMat4::zero());
  for (double s : z.singular_values) CHECK(s == 0.0);
  const auto i = svd4(CMat4::identity());
  for (double s : i.singular_values) CHECK_THAT(s, WithinAbs(1.0, 1e-14));
}

TEST_CASE("svd4 recovers constructed singular values and matches Eigen") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(0.0, 3.0);
  std::normal_distribution<double> n;
  for (int t = 0; t < 300; ++t) {
    std::array<double, 4> sigma{u(rng), u(rng), u(rng), u(rng)};
    if (t % 4 == 1) sigma[2] = sigma[3] = 0.0;
    if (t % 4 == 2) sigma[1] = sigma[0];
    std::sort(sigma.begin(), sigma.end(), std::greater<>());
    const CMat4 a = random_unitary4(rng);
    const CMat4 b = random_unitary4(rng);
    const CMat4 m = a * CMat4::diagonal(CVec4{sigma[0], sigma[1], sigma[2], sigma[3]}) * b.adjoint();
    const auto s = svd4(m);
    for (std::size_t k = 0; k < 4; ++k) CHECK_THAT(s.singular_values[k], WithinAbs(sigma[k], 1e-12));
    const CMat4 back = s.u * CMat4::diagonal(CVec4{s.singular_values[0], s.singular_values[1],
                                                   s.singular_values[2], s.singular_values[3]}) *
                       s.v.adjoint();
    CHECK((back - m).frobenius_norm() < 1e-12 * std::max(1.0, m.frobenius_norm()));
    CHECK(s.u.is_unitary(1e-12));
    CHECK(s.v.is_unitary(1e-12));

    Eigen::Matrix4cd g;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) g(r, c) = {n(rng), n(rng)};
    const auto mine = svd4(from_eigen<4>(g));
    Eigen::JacobiSVD<Eigen::Matrix4cd> oracle(g);
    for (int k = 0; k < 4; ++k)
      CHECK_THAT(mine.singular_values[static_cast<std::size_t>(k)],
                 WithinAbs(oracle.singularValues()(k), 1e-12));
  }
}

TEST_CASE("determinant agrees with Eigen") {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> n;
  for (int t = 0; t < 50; ++t) {
    Eigen::Matrix4cd g;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) g(r, c) = {n(rng), n(rng)};
    CHECK(std::abs(det(from_eigen<4>(g)) - g.determinant()) < 1e-12 * std::abs(g.determinant()) + 1e-13);
  }
}

TEST_CASE("Hermitian eigensolver and trace distance agree with Eigen") {
  std::mt19937_64 rng(2);
  std::normal_distribution<double> n;
  for (int dim : {2, 5, 12}) {
    Eigen::MatrixXcd g(dim, dim);
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) g(r, c) = {n(rng), n(rng)};
    const Eigen::MatrixXcd h = g + g.adjoint();
    CMatX m(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim));
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) m(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = h(r, c);
    const auto mine = eig_hermitian(m);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> oracle(h);
    for (int k = 0; k < dim; ++k)
      CHECK_THAT(mine.values[static_cast<std::size_t>(k)], WithinAbs(oracle.eigenvalues()(k), 1e-10));
    const double td = trace_distance(m, CMatX(static_cast<std::size_t>(dim), static_cast<std::size_t>(dim)));
    CHECK_THAT(td, WithinAbs(0.5 * oracle.eigenvalues().cwiseAbs().sum(), 1e-10));
  }
}

TEST_CASE("low-rank trace distance matches the dense computation") {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> n;
  const std::size_t dim = 10;
  auto rand_vec = [&] {
    CVecX v(dim);
    for (auto& x : v) x = {n(rng), n(rng)};
    return v;
  };
  std::vector<WeightedVector> rho{{0.3, rand_vec()}, {0.2, rand_vec()}};
  std::vector<WeightedVector> sigma{{0.5, rand_vec()}, {0.1, rand_vec()}, {0.7, rand_vec()}};
  CMatX a(dim, dim), b(dim, dim);
  for (const auto& t : rho) a += CMatX::outer(t.vector, t.vector) * t.weight;
  for (const auto& t : sigma) b += CMatX::outer(t.vector, t.vector) * t.weight;
  CHECK_THAT(trace_distance_low_rank(rho, sigma), WithinAbs(trace_distance(a, b), 1e-10));
}
