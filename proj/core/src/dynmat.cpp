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

#include "kcforge/dynmat.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "kcforge/error.hpp"

namespace kcforge {

CMatX CMatX::identity(std::size_t n) {
  CMatX m(n, n);
  for (std::size_t k = 0; k < n; ++k) m(k, k) = 1.0;
  return m;
}

CMatX CMatX::outer(const CVecX& a, const CVecX& b) {
  CMatX m(a.size(), b.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < b.size(); ++c) m(r, c) = a[r] * std::conj(b[c]);
  return m;
}

CMatX CMatX::adjoint() const {
  CMatX m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = std::conj((*this)(r, c));
  return m;
}

cplx CMatX::trace() const {
  cplx s{};
  for (std::size_t k = 0; k < std::min(rows_, cols_); ++k) s += (*this)(k, k);
  return s;
}

double CMatX::frobenius_norm() const {
  double s = 0.0;
  for (const auto& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

CVecX CMatX::col(std::size_t c) const {
  CVecX v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

CMatX& CMatX::operator+=(const CMatX& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_)
    throw Error(ErrorKind::DimensionMismatch, "matrix sum: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

CMatX& CMatX::operator-=(const CMatX& o) {
  if (o.rows_ != rows_ || o.cols_ != cols_)
    throw Error(ErrorKind::DimensionMismatch, "matrix difference: shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

CMatX& CMatX::operator*=(cplx s) {
  for (auto& v : data_) v *= s;
  return *this;
}

CMatX operator*(const CMatX& a, const CMatX& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorKind::DimensionMismatch, "matrix product: shape mismatch");
  CMatX m(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const cplx ark = a(r, k);
      if (ark == cplx{}) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) m(r, c) += ark * b(k, c);
    }
  return m;
}

CVecX operator*(const CMatX& a, const CVecX& v) {
  if (a.cols_ != v.size())
    throw Error(ErrorKind::DimensionMismatch, "matrix-vector product: shape mismatch");
  CVecX out(a.rows_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    cplx s{};
    for (std::size_t c = 0; c < a.cols_; ++c) s += a(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

double norm(const CVecX& v) {
  double s = 0.0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

cplx inner(const CVecX& a, const CVecX& b) {
  if (a.size() != b.size())
    throw Error(ErrorKind::DimensionMismatch, "inner product: length mismatch");
  cplx s{};
  for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a[k]) * b[k];
  return s;
}

CVecX kron(const CVecX& a, const CVecX& b) {
  CVecX out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i * b.size() + j] = a[i] * b[j];
  return out;
}

CMatX kron(const CMatX& a, const CMatX& b) {
  CMatX out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1)
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          out(i1 * b.rows() + i2, j1 * b.cols() + j2) = a(i1, j1) * b(i2, j2);
  return out;
}

HermitianEig eig_hermitian(const CMatX& h) {
  if (h.rows() != h.cols())
    throw Error(ErrorKind::DimensionMismatch, "eig_hermitian: matrix not square");
  const std::size_t n = h.rows();
  CMatX a = h;
  // Symmetrize away rounding noise.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const cplx avg = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = avg;
      a(j, i) = std::conj(avg);
    }
  }
  CMatX v = CMatX::identity(n);
  bool converged = n < 2;
  for (int sweep = 0; sweep < 100 && !converged; ++sweep) {
    double off = 0.0, total = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q) {
        total += std::norm(a(p, q));
        if (p != q) off += std::norm(a(p, q));
      }
    if (off <= 1e-34 * total || off < 1e-300) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double g = std::abs(a(p, q));
        if (g < 1e-300) continue;
        const cplx e = a(p, q) / g;
        const double zeta = (a(q, q).real() - a(p, p).real()) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::hypot(zeta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        // J = [[e c, e s], [-s, c]] on (p, q); A <- J^dagger A J.
        const cplx jpp = e * c, jpq = e * s, jqp = -s, jqq = c;
        for (std::size_t k = 0; k < n; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * jpp + akq * jqp;
          a(k, q) = akp * jpq + akq * jqq;
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * jpp + vkq * jqp;
          v(k, q) = vkp * jpq + vkq * jqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const cplx apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(jpp) * apk + std::conj(jqp) * aqk;
          a(q, k) = std::conj(jpq) * apk + std::conj(jqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  if (!converged)
    throw Error(ErrorKind::ConvergenceFailure, "eig_hermitian: Jacobi did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });
  HermitianEig out;
  out.values.resize(n);
  out.vectors = CMatX(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

double trace_distance(const CMatX& rho, const CMatX& sigma) {
  const auto eig = eig_hermitian(rho - sigma);
  double s = 0.0;
  for (double l : eig.values) s += std::abs(l);
  return 0.5 * s;
}

double trace_distance_low_rank(const std::vector<WeightedVector>& rho,
                               const std::vector<WeightedVector>& sigma) {
  std::vector<CVecX> basis;
  auto absorb = [&](const CVecX& x) {
    CVecX r = x;
    const double n0 = norm(r);
    if (n0 < 1e-300) return;
    for (int pass = 0; pass < 2; ++pass)
      for (const auto& b : basis) {
        const cplx c = inner(b, r);
        for (std::size_t k = 0; k < r.size(); ++k) r[k] -= c * b[k];
      }
    const double n1 = norm(r);
    if (n1 <= 1e-12 * n0) return;
    for (auto& v : r) v /= n1;
    basis.push_back(std::move(r));
  };
  for (const auto& t : rho) absorb(t.vector);
  for (const auto& t : sigma) absorb(t.vector);
  const std::size_t m = basis.size();
  if (m == 0) return 0.0;
  CMatX delta(m, m);
  auto accumulate = [&](const std::vector<WeightedVector>& terms, double sign) {
    for (const auto& t : terms) {
      CVecX coords(m);
      for (std::size_t i = 0; i < m; ++i) coords[i] = inner(basis[i], t.vector);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          delta(i, j) += sign * t.weight * coords[i] * std::conj(coords[j]);
    }
  };
  accumulate(rho, 1.0);
  accumulate(sigma, -1.0);
  const auto eig = eig_hermitian(delta);
  double s = 0.0;
  for (double l : eig.values) s += std::abs(l);
  return 0.5 * s;
}

}  // namespace kcforge
