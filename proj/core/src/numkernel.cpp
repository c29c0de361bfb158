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

#include "kcforge/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <vector>

namespace kcforge {

namespace {

constexpr int kMaxSweeps = 100;

template <std::size_t N>
RealSymEig<N> jacobi_real_symmetric(RMat<N> a) {
  RMat<N> v = RMat<N>::identity();
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double off = 0.0;
    double total = 0.0;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = 0; q < N; ++q) {
        total += a(p, q) * a(p, q);
        if (p != q) off += a(p, q) * a(p, q);
      }
    if (off <= 1e-30 * total || off < 1e-300) {
      converged = true;
      break;
    }
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) < 1e-300) continue;
        // Below rounding level of both diagonal entries: drop the element.
        const double scale = std::abs(a(p, p)) + std::abs(a(q, q));
        if (sweep > 3 && std::abs(apq) <= 1e-18 * scale) {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < N; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < N; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged)
    throw Error(ErrorKind::ConvergenceFailure,
                "Jacobi iteration did not converge for real symmetric matrix");

  std::array<std::size_t, N> order;
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return a(i, i) < a(j, j); });
  RealSymEig<N> out;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]);
    for (std::size_t r = 0; r < N; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

// Diagonalizes the k x k restriction of m onto the given columns of q and
// rotates those columns in place.
template <std::size_t K>
void refine_cluster(RMat4& q, const std::vector<std::size_t>& cols,
                    const RMat4& m) {
  RMat<K> restricted;
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < K; ++j) {
      double s = 0.0;
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t c = 0; c < 4; ++c)
          s += q(r, cols[i]) * m(r, c) * q(c, cols[j]);
      restricted(i, j) = s;
    }
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = i + 1; j < K; ++j) {
      const double avg = 0.5 * (restricted(i, j) + restricted(j, i));
      restricted(i, j) = restricted(j, i) = avg;
    }
  const auto eig = jacobi_real_symmetric<K>(restricted);
  RMat4 rotated = q;
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t j = 0; j < K; ++j) {
      double s = 0.0;
      for (std::size_t i = 0; i < K; ++i) s += q(r, cols[i]) * eig.vectors(i, j);
      rotated(r, cols[j]) = s;
    }
  q = rotated;
}

}  // namespace

RealSymEig<4> eig_real_symmetric(const RMat4& a) {
  return jacobi_real_symmetric<4>(a);
}
RealSymEig<2> eig_real_symmetric(const RMat<2>& a) {
  return jacobi_real_symmetric<2>(a);
}
RealSymEig<3> eig_real_symmetric(const RMat<3>& a) {
  return jacobi_real_symmetric<3>(a);
}

SymmetricUnitaryEig eig_symmetric_unitary(const CMat4& s, double eps) {
  if (!s.all_finite())
    throw Error(ErrorKind::NotUnitary, "matrix has non-finite entries");
  if (!s.is_symmetric(eps)) {
    std::ostringstream msg;
    msg << "matrix is not symmetric: ||S - S^T||_F = "
        << (s - s.transpose()).frobenius_norm();
    throw Error(ErrorKind::NotSymmetric, msg.str());
  }
  if (!s.is_unitary(eps)) {
    std::ostringstream msg;
    msg << "matrix is not unitary: ||S S^dagger - I||_F = "
        << s.unitarity_defect();
    throw Error(ErrorKind::NotUnitary, msg.str());
  }

  RMat4 re, im;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      const cplx sym = 0.5 * (s(i, j) + s(j, i));
      re(i, j) = sym.real();
      im(i, j) = sym.imag();
    }

  const auto eig_re = eig_real_symmetric(re);
  RMat4 q = eig_re.vectors;

  // Chain clustering of near-equal eigenvalues of Re(S).
  constexpr double kClusterGap = 1e-6;
  double mean_re = 0.0;
  std::size_t start = 0;
  while (start < 4) {
    std::size_t end = start + 1;
    while (end < 4 && eig_re.values[end] - eig_re.values[end - 1] <= kClusterGap)
      ++end;
    const std::size_t size = end - start;
    if (size > 1) {
      mean_re = 0.0;
      for (std::size_t k = start; k < end; ++k) mean_re += eig_re.values[k];
      mean_re /= static_cast<double>(size);
      // Im(S) separates the cluster; the residual spread of Re(S) breaks
      // ties when Im(S) is degenerate there too.
      RMat4 m = im;
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          m(i, j) += re(i, j) - (i == j ? mean_re : 0.0);
      std::vector<std::size_t> cols;
      for (std::size_t k = start; k < end; ++k) cols.push_back(k);
      switch (size) {
        case 2: refine_cluster<2>(q, cols, m); break;
        case 3: refine_cluster<3>(q, cols, m); break;
        default: refine_cluster<4>(q, cols, m); break;
      }
    }
    start = end;
  }

  if (det(q) < 0.0)
    for (std::size_t r = 0; r < 4; ++r) q(r, 0) = -q(r, 0);

  const CMat4 qc = to_complex(q);
  const CMat4 d = qc.transpose() * s * qc;
  double off = 0.0;
  SymmetricUnitaryEig out;
  out.vectors = q;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j) off += std::norm(d(i, j));
    const double mag = std::abs(d(i, i));
    out.eigenvalues[i] = mag > 0.0 ? d(i, i) / mag : cplx(1.0, 0.0);
  }
  if (std::sqrt(off) > 10.0 * eps) {
    std::ostringstream msg;
    msg << "joint diagonalization left off-diagonal residual " << std::sqrt(off);
    throw Error(ErrorKind::ConvergenceFailure, msg.str());
  }
  return out;
}

CMat4 reshuffle(const CMat4& g) {
  CMat4 r;
  for (std::size_t i1 = 0; i1 < 2; ++i1)
    for (std::size_t j1 = 0; j1 < 2; ++j1)
      for (std::size_t i2 = 0; i2 < 2; ++i2)
        for (std::size_t j2 = 0; j2 < 2; ++j2)
          r(i1 * 2 + j1, i2 * 2 + j2) = g(i1 * 2 + i2, j1 * 2 + j2);
  return r;
}

CMat2 to_special_unitary(const CMat2& u) {
  const cplx d = det(u);
  return u * (1.0 / std::sqrt(d));
}

KronFactors kron_factor_su2(const CMat4& g, double eps) {
  if (!g.is_unitary(eps)) {
    std::ostringstream msg;
    msg << "matrix is not unitary: ||G G^dagger - I||_F = " << g.unitarity_defect();
    throw Error(ErrorKind::NotUnitary, msg.str());
  }
  const Svd4 sv = svd4(reshuffle(g));
  if (sv.singular_values[1] > eps) {
    std::ostringstream msg;
    msg << "matrix is not a Kronecker product: second reshuffled singular value "
        << sv.singular_values[1];
    throw Error(ErrorKind::NotProductForm, msg.str());
  }
  const double scale = std::sqrt(sv.singular_values[0]);
  CMat2 a, b;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      a(i, j) = scale * sv.u(i * 2 + j, 0);
      b(i, j) = scale * std::conj(sv.v(i * 2 + j, 0));
    }
  KronFactors out{to_special_unitary(a), to_special_unitary(b), cplx(1.0, 0.0)};
  const cplx overlap = (kron(out.a, out.b).adjoint() * g).trace() / 4.0;
  out.phase = overlap / std::abs(overlap);
  const double residual = (g - out.phase * kron(out.a, out.b)).frobenius_norm();
  if (residual > 10.0 * eps) {
    std::ostringstream msg;
    msg << "Kronecker reconstruction residual " << residual;
    throw Error(ErrorKind::NotProductForm, msg.str());
  }
  return out;
}

Svd4 svd4(const CMat4& m) {
  if (!m.all_finite())
    throw Error(ErrorKind::ConvergenceFailure, "svd4: non-finite input");
  CMat4 a = m;
  CMat4 v = CMat4::identity();
  bool converged = false;
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < 4; ++p) {
      for (std::size_t q = p + 1; q < 4; ++q) {
        double alpha = 0.0, beta = 0.0;
        cplx gamma{};
        for (std::size_t k = 0; k < 4; ++k) {
          alpha += std::norm(a(k, p));
          beta += std::norm(a(k, q));
          gamma += std::conj(a(k, p)) * a(k, q);
        }
        const double g = std::abs(gamma);
        if (g < 1e-300 || g <= 1e-15 * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const cplx e = gamma / g;
        const double zeta = (beta - alpha) / (2.0 * g);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::hypot(zeta, 1.0));
        const double c = 1.0 / std::hypot(t, 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < 4; ++k) {
          const cplx akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * e * c - akq * s;
          a(k, q) = akp * e * s + akq * c;
          const cplx vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * e * c - vkq * s;
          v(k, q) = vkp * e * s + vkq * c;
        }
      }
    }
    if (!rotated) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw Error(ErrorKind::ConvergenceFailure, "svd4: Jacobi did not converge");

  std::array<double, 4> norms{};
  for (std::size_t k = 0; k < 4; ++k) norms[k] = a.col(k).norm();
  std::array<std::size_t, 4> order{0, 1, 2, 3};
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return norms[i] > norms[j]; });

  Svd4 out;
  const double smax = norms[order[0]];
  std::vector<CVec4> basis;
  for (std::size_t k = 0; k < 4; ++k) {
    const std::size_t src = order[k];
    out.singular_values[k] = norms[src];
    out.v.set_col(k, v.col(src));
    if (norms[src] > 1e-13 * smax && norms[src] > 1e-300) {
      const CVec4 col = a.col(src) * cplx(1.0 / norms[src], 0.0);
      out.u.set_col(k, col);
      basis.push_back(col);
    } else {
      basis.push_back(CVec4{});
    }
  }
  // Complete u for numerically zero singular values.
  for (std::size_t k = 0; k < 4; ++k) {
    if (basis[k].norm() > 0.5) continue;
    for (std::size_t trial = 0; trial < 4; ++trial) {
      CVec4 cand = CVec4::basis(trial);
      for (int pass = 0; pass < 2; ++pass)
        for (std::size_t j = 0; j < 4; ++j)
          if (basis[j].norm() > 0.5) cand -= inner(basis[j], cand) * basis[j];
      if (cand.norm() > 1e-3) {
        basis[k] = cand.normalized();
        out.u.set_col(k, basis[k]);
        break;
      }
    }
  }
  return out;
}

}  // namespace kcforge
