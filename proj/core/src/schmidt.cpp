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

#include "kcforge/schmidt.hpp"

#include <sstream>

namespace kcforge {

namespace {

CMat2 unvec(const CVec4& v) { return CMat2{v[0], v[1], v[2], v[3]}; }

int count_above(const std::array<double, 4>& s, double threshold) {
  int n = 0;
  for (double v : s)
    if (v > threshold) ++n;
  return n;
}

}  // namespace

CMat4 OperatorSchmidt::reconstruct() const {
  CMat4 out;
  for (std::size_t k = 0; k < 4; ++k)
    out += kron(a_ops[k], b_ops[k]) * cplx(coefficients[k], 0.0);
  return out;
}

OperatorSchmidt operator_schmidt(const TwoQubitUnitary& u) {
  // reshuffle(a (x) b) = vec(a) vec(b)^T, so R = sum_k s_k u_k conj(v_k)^T.
  const Svd4 svd = svd4(reshuffle(u.matrix()));
  OperatorSchmidt out;
  for (std::size_t k = 0; k < 4; ++k) {
    out.coefficients[k] = svd.singular_values[k];
    out.a_ops[k] = unvec(svd.u.col(k));
    out.b_ops[k] = unvec(svd.v.col(k).conj());
  }
  return out;
}

int operator_schmidt_number(const TwoQubitUnitary& u, double eps_zero) {
  const auto s = operator_schmidt(u).coefficients;
  const int n = count_above(s, eps_zero);
  if (n != 3) return n;
  for (double scale : {10.0, 0.1}) {
    const int m = count_above(s, eps_zero * scale);
    if (m != 3) return m;
  }
  std::ostringstream msg;
  msg << "operator Schmidt count is 3 (coefficients " << s[0] << ", " << s[1]
      << ", " << s[2] << ", " << s[3] << ")";
  throw Error(ErrorKind::DegenerateCount, msg.str());
}

}  // namespace kcforge
