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

// Fixed-size dense matrices and vectors over double / complex<double>.
// Storage is row-major; all operations are value-semantic.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <type_traits>

namespace kcforge {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

namespace detail {
inline double conj_of(double x) { return x; }
inline cplx conj_of(const cplx& x) { return std::conj(x); }
inline double real_of(double x) { return x; }
inline double real_of(const cplx& x) { return x.real(); }
inline bool finite_of(double x) { return std::isfinite(x); }
inline bool finite_of(const cplx& x) {
  return std::isfinite(x.real()) && std::isfinite(x.imag());
}
}  // namespace detail

template <typename T, std::size_t N>
class Vec {
 public:
  using value_type = T;
  static constexpr std::size_t size() { return N; }

  Vec() { data_.fill(T{}); }
  Vec(std::initializer_list<T> init) {
    data_.fill(T{});
    std::size_t k = 0;
    for (const auto& v : init) {
      if (k == N) break;
      data_[k++] = v;
    }
  }

  static Vec basis(std::size_t k) {
    Vec v;
    v[k] = T{1};
    return v;
  }

  T& operator[](std::size_t k) { return data_[k]; }
  const T& operator[](std::size_t k) const { return data_[k]; }

  double norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
  }
  Vec normalized() const { return *this * T{1.0 / norm()}; }

  Vec conj() const {
    Vec r;
    for (std::size_t k = 0; k < N; ++k) r[k] = detail::conj_of(data_[k]);
    return r;
  }

  bool all_finite() const {
    for (const auto& v : data_)
      if (!detail::finite_of(v)) return false;
    return true;
  }

  Vec& operator+=(const Vec& o) {
    for (std::size_t k = 0; k < N; ++k) data_[k] += o[k];
    return *this;
  }
  Vec& operator-=(const Vec& o) {
    for (std::size_t k = 0; k < N; ++k) data_[k] -= o[k];
    return *this;
  }
  friend Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend Vec operator*(Vec a, T s) {
    for (auto& v : a.data_) v *= s;
    return a;
  }
  friend Vec operator*(T s, Vec a) { return a * s; }

  auto begin() { return data_.begin(); }
  auto end() { return data_.end(); }
  auto begin() const { return data_.begin(); }
  auto end() const { return data_.end(); }

 private:
  std::array<T, N> data_;
};

/// <a|b>, conjugate-linear in the first argument.
template <typename T, std::size_t N>
T inner(const Vec<T, N>& a, const Vec<T, N>& b) {
  T s{};
  for (std::size_t k = 0; k < N; ++k) s += detail::conj_of(a[k]) * b[k];
  return s;
}

template <typename T, std::size_t N>
class Mat {
 public:
  using value_type = T;
  static constexpr std::size_t dim() { return N; }

  Mat() { data_.fill(T{}); }
  /// Row-major initializer.
  Mat(std::initializer_list<T> init) {
    data_.fill(T{});
    std::size_t k = 0;
    for (const auto& v : init) {
      if (k == N * N) break;
      data_[k++] = v;
    }
  }

  static Mat identity() {
    Mat m;
    for (std::size_t k = 0; k < N; ++k) m(k, k) = T{1};
    return m;
  }
  static Mat zero() { return Mat(); }
  static Mat diagonal(const Vec<T, N>& d) {
    Mat m;
    for (std::size_t k = 0; k < N; ++k) m(k, k) = d[k];
    return m;
  }
  static Mat outer(const Vec<T, N>& a, const Vec<T, N>& b) {
    Mat m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(r, c) = a[r] * detail::conj_of(b[c]);
    return m;
  }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * N + c];
  }

  Vec<T, N> col(std::size_t c) const {
    Vec<T, N> v;
    for (std::size_t r = 0; r < N; ++r) v[r] = (*this)(r, c);
    return v;
  }
  void set_col(std::size_t c, const Vec<T, N>& v) {
    for (std::size_t r = 0; r < N; ++r) (*this)(r, c) = v[r];
  }
  Vec<T, N> row(std::size_t r) const {
    Vec<T, N> v;
    for (std::size_t c = 0; c < N; ++c) v[c] = (*this)(r, c);
    return v;
  }

  Mat transpose() const {
    Mat m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) m(c, r) = (*this)(r, c);
    return m;
  }
  Mat conj() const {
    Mat m;
    for (std::size_t k = 0; k < N * N; ++k) m.data_[k] = detail::conj_of(data_[k]);
    return m;
  }
  Mat adjoint() const { return conj().transpose(); }

  T trace() const {
    T s{};
    for (std::size_t k = 0; k < N; ++k) s += (*this)(k, k);
    return s;
  }

  double frobenius_norm() const {
    double s = 0.0;
    for (const auto& v : data_) s += std::norm(v);
    return std::sqrt(s);
  }
  double max_abs() const {
    double m = 0.0;
    for (const auto& v : data_) m = std::max(m, std::abs(v));
    return m;
  }

  bool all_finite() const {
    for (const auto& v : data_)
      if (!detail::finite_of(v)) return false;
    return true;
  }

  /// ||M M^dagger - I||_F
  double unitarity_defect() const {
    return ((*this) * adjoint() - identity()).frobenius_norm();
  }
  bool is_unitary(double eps) const {
    return all_finite() && unitarity_defect() <= eps;
  }
  bool is_symmetric(double eps) const {
    return (*this - transpose()).frobenius_norm() <= eps;
  }
  bool is_hermitian(double eps) const {
    return (*this - adjoint()).frobenius_norm() <= eps;
  }

  Mat& operator+=(const Mat& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  Mat& operator-=(const Mat& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Mat& operator*=(T s) {
    for (auto& v : data_) v *= s;
    return *this;
  }
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, T s) { return a *= s; }
  friend Mat operator*(T s, Mat a) { return a *= s; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    Mat m;
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t k = 0; k < N; ++k) {
        const T ark = a(r, k);
        for (std::size_t c = 0; c < N; ++c) m(r, c) += ark * b(k, c);
      }
    return m;
  }
  friend Vec<T, N> operator*(const Mat& a, const Vec<T, N>& v) {
    Vec<T, N> out;
    for (std::size_t r = 0; r < N; ++r) {
      T s{};
      for (std::size_t c = 0; c < N; ++c) s += a(r, c) * v[c];
      out[r] = s;
    }
    return out;
  }

  const std::array<T, N * N>& data() const { return data_; }

 private:
  std::array<T, N * N> data_;
};

template <std::size_t N>
using CMat = Mat<cplx, N>;
template <std::size_t N>
using RMat = Mat<double, N>;
template <std::size_t N>
using CVec = Vec<cplx, N>;

using CMat2 = CMat<2>;
using CMat4 = CMat<4>;
using CMat8 = CMat<8>;
using CMat16 = CMat<16>;
using CVec2 = CVec<2>;
using CVec4 = CVec<4>;
using RMat4 = RMat<4>;

template <typename T, std::size_t M, std::size_t N>
Mat<T, M * N> kron(const Mat<T, M>& a, const Mat<T, N>& b) {
  Mat<T, M * N> out;
  for (std::size_t i1 = 0; i1 < M; ++i1)
    for (std::size_t j1 = 0; j1 < M; ++j1) {
      const T aij = a(i1, j1);
      for (std::size_t i2 = 0; i2 < N; ++i2)
        for (std::size_t j2 = 0; j2 < N; ++j2)
          out(i1 * N + i2, j1 * N + j2) = aij * b(i2, j2);
    }
  return out;
}

template <typename T, std::size_t M, std::size_t N>
Vec<T, M * N> kron(const Vec<T, M>& a, const Vec<T, N>& b) {
  Vec<T, M * N> out;
  for (std::size_t i = 0; i < M; ++i)
    for (std::size_t j = 0; j < N; ++j) out[i * N + j] = a[i] * b[j];
  return out;
}

/// Determinant by LU with partial pivoting.
template <typename T, std::size_t N>
T det(Mat<T, N> m) {
  T d{1};
  for (std::size_t k = 0; k < N; ++k) {
    std::size_t piv = k;
    for (std::size_t r = k + 1; r < N; ++r)
      if (std::abs(m(r, k)) > std::abs(m(piv, k))) piv = r;
    if (std::abs(m(piv, k)) == 0.0) return T{};
    if (piv != k) {
      for (std::size_t c = 0; c < N; ++c) std::swap(m(k, c), m(piv, c));
      d = -d;
    }
    d *= m(k, k);
    for (std::size_t r = k + 1; r < N; ++r) {
      const T f = m(r, k) / m(k, k);
      for (std::size_t c = k; c < N; ++c) m(r, c) -= f * m(k, c);
    }
  }
  return d;
}

inline CMat4 to_complex(const RMat4& r) {
  CMat4 c;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) c(i, j) = r(i, j);
  return c;
}

/// Distance between a and b after removing the best global phase:
/// min_phi ||a - e^{i phi} b||_F.
template <std::size_t N>
double phase_insensitive_distance(const CMat<N>& a, const CMat<N>& b) {
  cplx overlap{};
  for (std::size_t k = 0; k < N * N; ++k)
    overlap += std::conj(b.data()[k]) * a.data()[k];
  const double na = a.frobenius_norm();
  const double nb = b.frobenius_norm();
  const double d2 = na * na + nb * nb - 2.0 * std::abs(overlap);
  return std::sqrt(std::max(0.0, d2));
}

}  // namespace kcforge
