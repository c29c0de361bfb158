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

#include "kcforge/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "kcforge/synth.hpp"

namespace kcforge {

namespace {

cplx gaussian(Rng& rng) {
  std::normal_distribution<double> n;
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

template <std::size_t N>
CMat<N> ginibre_qr(Rng& rng) {
  CMat<N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = gaussian(rng);
  // Modified Gram-Schmidt; the implied R has a positive diagonal, which is
  // the phase fix that makes Q Haar distributed.
  for (std::size_t c = 0; c < N; ++c) {
    CVec<N> v = m.col(c);
    for (std::size_t p = 0; p < c; ++p) {
      const CVec<N> q = m.col(p);
      v -= q * inner(q, v);
    }
    m.set_col(c, v.normalized());
  }
  return m;
}

// Haar random orthonormal pair in C^d.
std::array<CVecX, 2> orthonormal_pair(int d, Rng& rng) {
  std::array<CVecX, 2> out;
  for (auto& v : out) {
    v.resize(static_cast<std::size_t>(d));
    for (auto& x : v) x = gaussian(rng);
  }
  const double n0 = norm(out[0]);
  for (auto& x : out[0]) x /= n0;
  const cplx ov = inner(out[0], out[1]);
  for (std::size_t k = 0; k < out[1].size(); ++k) out[1][k] -= ov * out[0][k];
  const double n1 = norm(out[1]);
  for (auto& x : out[1]) x /= n1;
  return out;
}

}  // namespace

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Rng sample_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
  return Rng(splitmix64(splitmix64(splitmix64(seed) ^ stream) ^ index));
}

CMat4 haar_unitary4(Rng& rng) { return ginibre_qr<4>(rng); }
CMat2 haar_unitary2(Rng& rng) { return ginibre_qr<2>(rng); }
CMat2 random_su2(Rng& rng) { return to_special_unitary(haar_unitary2(rng)); }
LocalPair random_locals(Rng& rng) { return {random_su2(rng), random_su2(rng)}; }

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

QubitState random_qubit_state(Rng& rng) {
  CVec2 v{gaussian(rng), gaussian(rng)};
  return QubitState(v.normalized());
}

WeylPoint random_weyl_with_kc(int k, Rng& rng, double lo) {
  std::array<double, 3> a{0.0, 0.0, 0.0};
  for (int i = 0; i < k && i < 3; ++i) a[static_cast<std::size_t>(i)] = uniform(rng, lo, kPi / 4.0 - lo);
  std::sort(a.begin(), a.begin() + std::min(k, 3), std::greater<>());
  return {a[0], a[1], a[2]};
}

CMat4 dress(const WeylPoint& w, Rng& rng) {
  const LocalPair l = random_locals(rng);
  const LocalPair r = random_locals(rng);
  const cplx phase = std::exp(cplx(0.0, uniform(rng, 0.0, 2.0 * kPi)));
  return phase * l.tensor() * canonical_gate(w) * r.tensor();
}

CMat4 random_kc_unitary(int k, Rng& rng, double lo) {
  const WeylPoint w = random_weyl_with_kc(k, rng, lo);
  return dress(w, rng);
}

CMat4 random_controlled_unitary(Rng& rng) {
  const CMat2 v = haar_unitary2(rng);
  const CMat2 p0{1.0, 0.0, 0.0, 0.0};
  const CMat2 p1{0.0, 0.0, 0.0, 1.0};
  const CMat4 cu = kron(p0, CMat2::identity()) + kron(p1, v);
  return random_locals(rng).tensor() * cu * random_locals(rng).tensor();
}

CMat4 random_dressed_controlled_phase(Rng& rng) {
  const double theta = uniform(rng, 0.0, 2.0 * kPi);
  return random_locals(rng).tensor() * controlled_phase(theta) *
         random_locals(rng).tensor();
}

CVecX random_rank2_pair(int d_r, Rng& rng) {
  const double p = uniform(rng, 0.05, 0.95);
  const CMat2 e = haar_unitary2(rng);
  const auto w = orthonormal_pair(d_r, rng);
  const std::size_t dr = static_cast<std::size_t>(d_r);
  CVecX out(2 * dr);
  const std::array<double, 2> amp{std::sqrt(p), std::sqrt(1.0 - p)};
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t a = 0; a < 2; ++a)
      for (std::size_t r = 0; r < dr; ++r) out[a * dr + r] += amp[k] * e(a, k) * w[k][r];
  return out;
}

}  // namespace kcforge
