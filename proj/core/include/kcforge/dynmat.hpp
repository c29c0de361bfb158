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

// Runtime-sized complex matrices for state-level work (density matrices of
// qubit+reference systems, up to a few dozen rows).

#include <cstddef>
#include <vector>

#include "kcforge/matrix.hpp"

namespace kcforge {

using CVecX = std::vector<cplx>;

class CMatX {
 public:
  CMatX() = default;
  CMatX(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static CMatX identity(std::size_t n);
  static CMatX outer(const CVecX& a, const CVecX& b);
  template <std::size_t N>
  static CMatX from(const CMat<N>& m) {
    CMatX out(N, N);
    for (std::size_t r = 0; r < N; ++r)
      for (std::size_t c = 0; c < N; ++c) out(r, c) = m(r, c);
    return out;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  CMatX adjoint() const;
  cplx trace() const;
  double frobenius_norm() const;
  CVecX col(std::size_t c) const;

  CMatX& operator+=(const CMatX& o);
  CMatX& operator-=(const CMatX& o);
  CMatX& operator*=(cplx s);
  friend CMatX operator+(CMatX a, const CMatX& b) { return a += b; }
  friend CMatX operator-(CMatX a, const CMatX& b) { return a -= b; }
  friend CMatX operator*(CMatX a, cplx s) { return a *= s; }
  friend CMatX operator*(const CMatX& a, const CMatX& b);
  friend CVecX operator*(const CMatX& a, const CVecX& v);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

double norm(const CVecX& v);
cplx inner(const CVecX& a, const CVecX& b);
CVecX kron(const CVecX& a, const CVecX& b);
CMatX kron(const CMatX& a, const CMatX& b);

struct HermitianEig {
  std::vector<double> values;  // ascending
  CMatX vectors;               // columns
};

/// Complex Jacobi eigensolver for Hermitian matrices (small n).
HermitianEig eig_hermitian(const CMatX& h);

/// Trace distance 1/2 ||rho - sigma||_1 of two Hermitian matrices.
double trace_distance(const CMatX& rho, const CMatX& sigma);

/// Trace distance between two operators given as weighted sums of
/// projectors sum_k w_k |x_k><x_k|, computed on the span of all vectors.
struct WeightedVector {
  double weight;
  CVecX vector;
};
double trace_distance_low_rank(const std::vector<WeightedVector>& rho,
                               const std::vector<WeightedVector>& sigma);

}  // namespace kcforge
