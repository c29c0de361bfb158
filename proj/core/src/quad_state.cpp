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

#include "kcforge/quad_state.hpp"

#include <cmath>
#include <sstream>

namespace kcforge {

namespace {

void check_dim(int d) {
  if (d < 1 || d > kMaxReferenceDim) {
    std::ostringstream msg;
    msg << "reference dimension " << d << " outside [1, " << kMaxReferenceDim << "]";
    throw Error(ErrorKind::InvalidArgument, msg.str());
  }
}

void check_size(const CVecX& amps, int d_ra, int d_rb) {
  const std::size_t want = static_cast<std::size_t>(4 * d_ra * d_rb);
  if (amps.size() != want) {
    std::ostringstream msg;
    msg << "expected " << want << " amplitudes, got " << amps.size();
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
}

// The state as a (2 d_ra) x (2 d_rb) matrix.
CMatX as_matrix(const CVecX& amps, int d_ra, int d_rb) {
  const std::size_t rows = 2 * static_cast<std::size_t>(d_ra);
  const std::size_t cols = 2 * static_cast<std::size_t>(d_rb);
  CMatX m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = amps[i * cols + j];
  return m;
}

// Swaps the roles of the two pairs so that B-side work reuses A-side code.
CVecX transpose_sides(const CVecX& amps, int d_ra, int d_rb) {
  const std::size_t rows = 2 * static_cast<std::size_t>(d_ra);
  const std::size_t cols = 2 * static_cast<std::size_t>(d_rb);
  CVecX out(amps.size());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out[j * rows + i] = amps[i * cols + j];
  return out;
}

}  // namespace

QuadState::QuadState(int d_ra, int d_rb, CVecX amplitudes, double eps)
    : d_ra_(d_ra), d_rb_(d_rb), amps_(std::move(amplitudes)) {
  check_dim(d_ra);
  check_dim(d_rb);
  check_size(amps_, d_ra, d_rb);
  const double n = norm(amps_);
  if (!std::isfinite(n) || std::abs(n - 1.0) > eps) {
    std::ostringstream msg;
    msg << "state is not normalized: norm " << n;
    throw Error(ErrorKind::InvalidState, msg.str());
  }
}

QuadState QuadState::product(const CVecX& ar_a, int d_ra, const CVecX& br_b,
                             int d_rb, double eps) {
  check_dim(d_ra);
  check_dim(d_rb);
  if (ar_a.size() != static_cast<std::size_t>(2 * d_ra) ||
      br_b.size() != static_cast<std::size_t>(2 * d_rb))
    throw Error(ErrorKind::DimensionMismatch, "factor sizes do not match dimensions");
  return QuadState(d_ra, d_rb, kron(ar_a, br_b), eps);
}

CMatX QuadState::marginal_ar_a() const { return kcforge::marginal_ar_a(amps_, d_ra_, d_rb_); }
CMatX QuadState::marginal_br_b() const { return kcforge::marginal_br_b(amps_, d_ra_, d_rb_); }

CMatX marginal_ar_a(const CVecX& amps, int d_ra, int d_rb) {
  check_size(amps, d_ra, d_rb);
  const CMatX m = as_matrix(amps, d_ra, d_rb);
  return m * m.adjoint();
}

CMatX marginal_br_b(const CVecX& amps, int d_ra, int d_rb) {
  check_size(amps, d_ra, d_rb);
  const CMatX m = as_matrix(transpose_sides(amps, d_ra, d_rb), d_rb, d_ra);
  return m * m.adjoint();
}

CVecX apply_ab(const CVecX& amps, int d_ra, int d_rb, const CMat4& u) {
  check_size(amps, d_ra, d_rb);
  CVecX out(amps.size());
  for (int ra = 0; ra < d_ra; ++ra)
    for (int rb = 0; rb < d_rb; ++rb)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
          cplx s{};
          for (int a2 = 0; a2 < 2; ++a2)
            for (int b2 = 0; b2 < 2; ++b2)
              s += u(static_cast<std::size_t>(a * 2 + b), static_cast<std::size_t>(a2 * 2 + b2)) *
                   amps[QuadState::index(a2, ra, b2, rb, d_ra, d_rb)];
          out[QuadState::index(a, ra, b, rb, d_ra, d_rb)] = s;
        }
  return out;
}

CVecX apply_a(const CVecX& amps, int d_ra, int d_rb, const CMat2& g) {
  return apply_ab(amps, d_ra, d_rb, kron(g, CMat2::identity()));
}

CVecX apply_b(const CVecX& amps, int d_ra, int d_rb, const CMat2& g) {
  return apply_ab(amps, d_ra, d_rb, kron(CMat2::identity(), g));
}

CVecX maximally_entangled(int d_r) {
  if (d_r < 2) throw Error(ErrorKind::InvalidArgument, "reference dimension must be at least 2");
  check_dim(d_r);
  CVecX v(static_cast<std::size_t>(2 * d_r));
  v[0] = M_SQRT1_2;
  v[static_cast<std::size_t>(d_r + 1)] = M_SQRT1_2;
  return v;
}

QubitSchmidt qubit_schmidt(const CVecX& psi, int d_r) {
  const std::size_t dr = static_cast<std::size_t>(d_r);
  if (psi.size() != 2 * dr)
    throw Error(ErrorKind::DimensionMismatch, "qubit-reference vector has wrong size");
  CMatX m(2, dr);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t r = 0; r < dr; ++r) m(a, r) = psi[a * dr + r];
  const HermitianEig eig = eig_hermitian(m * m.adjoint());
  QubitSchmidt out;
  for (std::size_t k = 0; k < 2; ++k) {
    // Descending order; eig is ascending.
    const std::size_t src = 1 - k;
    CVec2 e{eig.vectors(0, src), eig.vectors(1, src)};
    // w_k = m^T conj(e_k) / s_k; computing s_k as its norm keeps tiny
    // coefficients accurate to rounding level.
    CVecX w(dr);
    for (std::size_t r = 0; r < dr; ++r)
      w[r] = m(0, r) * std::conj(e[0]) + m(1, r) * std::conj(e[1]);
    const double s = norm(w);
    if (s > 0.0)
      for (auto& x : w) x /= s;
    out.coefficients[k] = s;
    out.qubit_vectors[k] = e;
    out.reference_vectors[k] = w;
  }
  return out;
}

std::array<CVecX, 2> split_product(const QuadState& s, double eps) {
  const CMatX m = as_matrix(s.amplitudes(), s.d_ra(), s.d_rb());
  const HermitianEig eig = eig_hermitian(m * m.adjoint());
  const std::size_t top = eig.values.size() - 1;
  CVecX x = eig.vectors.col(top);
  CVecX y(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) y[j] += std::conj(x[i]) * m(i, j);
  double residual = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) residual += std::norm(m(i, j) - x[i] * y[j]);
  residual = std::sqrt(residual);
  if (residual > eps) {
    std::ostringstream msg;
    msg << "state is not a product across AR_A | BR_B (residual " << residual << ")";
    throw Error(ErrorKind::InvalidState, msg.str());
  }
  const double ny = norm(y);
  for (auto& v : y) v /= ny;
  return {x, y};
}

ReferenceReduction reduce_reference(const QuadState& s, Side side, double eps) {
  const auto parts = split_product(s, eps);
  const int d_r = side == Side::A ? s.d_ra() : s.d_rb();
  const CVecX& pair = side == Side::A ? parts[0] : parts[1];
  const QubitSchmidt sch = qubit_schmidt(pair, d_r);
  const double s1 = sch.coefficients[1];
  if (s1 > kExactRankZero && s1 <= eps) {
    std::ostringstream msg;
    msg << "second Schmidt coefficient " << s1
        << " is too close to zero to decide the rank";
    throw Error(ErrorKind::RankDetectionAmbiguous, msg.str());
  }
  const int rank = s1 > eps ? 2 : 1;
  const std::size_t dr = static_cast<std::size_t>(d_r);

  CMatX j(static_cast<std::size_t>(rank), dr);
  if (rank == 2) {
    // J w_k = conj(e_k) / (sqrt(2) s_k), so that sum_k s_k e_k (x) J w_k is
    // sum_k e_k (x) conj(e_k) / sqrt(2) = (|00> + |11>)/sqrt(2).
    for (std::size_t k = 0; k < 2; ++k) {
      const CVec2 ce = sch.qubit_vectors[k].conj();
      const double scale = 1.0 / (M_SQRT2 * sch.coefficients[k]);
      for (std::size_t row = 0; row < 2; ++row)
        for (std::size_t c = 0; c < dr; ++c)
          j(row, c) += ce[row] * std::conj(sch.reference_vectors[k][c]) * scale;
    }
  } else {
    for (std::size_t c = 0; c < dr; ++c)
      j(0, c) = std::conj(sch.reference_vectors[0][c]) / sch.coefficients[0];
  }
  const std::size_t nr = static_cast<std::size_t>(rank);
  CVecX reduced_pair(2 * nr);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t row = 0; row < nr; ++row)
      for (std::size_t c = 0; c < dr; ++c)
        reduced_pair[a * nr + row] += j(row, c) * pair[a * dr + c];
  const double n = norm(reduced_pair);
  for (auto& v : reduced_pair) v /= n;

  if (side == Side::A)
    return {QuadState::product(reduced_pair, rank, parts[1], s.d_rb()), j, rank};
  return {QuadState::product(parts[0], s.d_ra(), reduced_pair, rank), j, rank};
}

}  // namespace kcforge
