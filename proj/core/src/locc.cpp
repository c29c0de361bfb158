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

#include "kcforge/locc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace kcforge {

namespace {

// Below this, K^dagger K counts as proportional to the identity.
constexpr double kProportionalTolerance = 1e-6;

const std::array<CMat2, 4>& su2_basis() {
  static const std::array<CMat2, 4> basis{pauli::I, pauli::X * kI, pauli::Y * kI,
                                          pauli::Z * kI};
  return basis;
}

MeasurementBasis basis_from_angles(double theta, double phi) {
  const QubitState m = QubitState::bloch(theta, phi);
  return {m.vector(), CVec2{-std::conj(m.b()), std::conj(m.a())}};
}

std::vector<CMat2> projectors(const MeasurementBasis& basis) {
  std::vector<CMat2> out;
  for (const auto& m : basis) out.push_back(CMat2::outer(m, m));
  return out;
}

double proportional_defect(const CMat2& k) {
  const CMat2 kk = k.adjoint() * k;
  return (kk - CMat2::identity() * (0.5 * kk.trace())).frobenius_norm();
}

// Sum of normalized Kraus operators' defects for an ancilla and basis.
double basis_defect(const TwoQubitUnitary& u, const QubitState& phi,
                    const MeasurementBasis& basis) {
  double total = 0.0;
  for (const auto& k : induced_kraus(u, phi, basis).kraus) total += proportional_defect(k);
  return total;
}

// One-outcome branches of the search scores. With maximally entangled
// references, the AR_A fidelity of outcome r is sum_b |Tr(W_r K_rb)|^2 / (4 n_b)
// where b runs over the n_b computational inputs of B (n_b = 2 when B is
// entangled with R_B, n_b = 1 with a pure ancilla).
double nuclear_score(const CMat2& k) {
  const double f2 = k.frobenius_norm() * k.frobenius_norm();
  return (f2 + 2.0 * std::abs(det(k))) / 4.0;
}

// A-side operators (I (x) <b|) U (I (x) |phi>) for b = 0, 1.
std::array<CMat2, 2> conditional_ops(const TwoQubitUnitary& u, const QubitState& phi) {
  const auto ch = induced_kraus(u, phi, computational_basis());
  return {ch.kraus[0], ch.kraus[1]};
}

double score_ancilla_case(const std::array<CMat2, 2>& x, const MeasurementBasis& m) {
  double f = 0.0;
  for (const auto& mr : m) f += nuclear_score(x[0] * std::conj(mr[0]) + x[1] * std::conj(mr[1]));
  return f;
}

// ks[b] = rows of U for B input b, as functions of the measurement vector.
struct BothRefsOps {
  // x[b][c] = (I (x) <c|) U (I (x) |b>)
  std::array<std::array<CMat2, 2>, 2> x;
};

BothRefsOps both_refs_ops(const TwoQubitUnitary& u) {
  BothRefsOps ops;
  for (int b = 0; b < 2; ++b) {
    const auto ch = induced_kraus(u, b == 0 ? QubitState::zero() : QubitState::one(),
                                  computational_basis());
    ops.x[b] = {ch.kraus[0], ch.kraus[1]};
  }
  return ops;
}

std::vector<CMat2> both_refs_kraus(const BothRefsOps& ops, const CVec2& mr) {
  std::vector<CMat2> ks;
  for (int b = 0; b < 2; ++b)
    ks.push_back(ops.x[b][0] * std::conj(mr[0]) + ops.x[b][1] * std::conj(mr[1]));
  return ks;
}

double score_both_refs(const BothRefsOps& ops, const MeasurementBasis& m) {
  double f = 0.0;
  for (const auto& mr : m) f += best_aligning_unitary(both_refs_kraus(ops, mr)).second / 8.0;
  return f;
}

// Coordinate descent with step halving over a small parameter vector.
template <std::size_t N, typename F>
double refine(std::array<double, N>& x, double step, int steps, F&& score) {
  double best = score(x);
  for (int s = 0; s < steps; ++s) {
    bool moved = false;
    for (std::size_t k = 0; k < N; ++k)
      for (double d : {-step, step}) {
        auto y = x;
        y[k] += d;
        const double v = score(y);
        if (v > best) {
          best = v;
          x = y;
          moved = true;
        }
      }
    if (!moved) step *= 0.5;
  }
  return best;
}

CMat2 partial_trace_second(const CMat4& rho, bool keep_first) {
  CMat2 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        out(i, j) += keep_first ? rho(i * 2 + k, j * 2 + k) : rho(k * 2 + i, k * 2 + j);
  return out;
}

CMat4 ar_marginal_after(const TwoQubitUnitary& u, const QubitState& phi) {
  const CVecX b{phi.a(), phi.b()};
  const QuadState s = QuadState::product(maximally_entangled(2), 2, b, 1);
  const CMatX m = marginal_ar_a(apply_ab(s.amplitudes(), 2, 1, u.matrix()), 2, 1);
  CMat4 out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) out(i, j) = m(i, j);
  return out;
}

}  // namespace

std::string_view to_string(Scenario s) {
  switch (s) {
    case Scenario::BothRefsEntangled: return "BothRefsEntangled";
    case Scenario::OnlyARefEntangled: return "OnlyARefEntangled";
    case Scenario::NoRefsEntangled: return "NoRefsEntangled";
  }
  return "Unknown";
}

Scenario parse_scenario(std::string_view text) {
  if (text == "both" || text == "BothRefsEntangled") return Scenario::BothRefsEntangled;
  if (text == "a-only" || text == "OnlyARefEntangled") return Scenario::OnlyARefEntangled;
  if (text == "none" || text == "NoRefsEntangled") return Scenario::NoRefsEntangled;
  throw Error(ErrorKind::InvalidArgument,
              "unknown scenario '" + std::string(text) + "' (expected both, a-only or none)");
}

std::size_t OneWayLoccProtocol::outcome_count() const {
  return b_measurement.empty() ? 1 : b_measurement.size();
}

CMat2 OneWayLoccProtocol::measurement(std::size_t r) const {
  return b_measurement.empty() ? CMat2::identity() : b_measurement.at(r);
}

CMat2 OneWayLoccProtocol::correction(std::size_t r) const {
  if (a_corrections.empty()) return CMat2::identity();
  return a_corrections.at(r);
}

double OneWayLoccProtocol::completeness_defect() const {
  CMat2 s;
  for (std::size_t r = 0; r < outcome_count(); ++r) {
    const CMat2 m = measurement(r);
    s += m.adjoint() * m;
  }
  return (s - CMat2::identity()).frobenius_norm();
}

double OneWayLoccProtocol::correction_unitarity_defect() const {
  double worst = 0.0;
  for (std::size_t r = 0; r < outcome_count(); ++r) {
    const CMat2 c = correction(r);
    worst = std::max(worst, (c.adjoint() * c - CMat2::identity()).frobenius_norm());
  }
  return worst;
}

Decision decide_partial_invertibility(const TwoQubitUnitary& u, Scenario s,
                                      double eps_zero) {
  const KcNumber kc = kc_number(decompose(u), eps_zero);
  bool ok = true;
  switch (s) {
    case Scenario::BothRefsEntangled: ok = kc.value <= 1; break;
    case Scenario::OnlyARefEntangled: ok = kc.value <= 2; break;
    case Scenario::NoRefsEntangled: ok = true; break;
  }
  return {ok, kc, gate_class_of(kc)};
}

std::pair<CMat2, double> best_aligning_unitary(const std::vector<CMat2>& ks) {
  RMat4 m;
  for (const auto& k : ks) {
    std::array<cplx, 4> t;
    for (std::size_t j = 0; j < 4; ++j) t[j] = (su2_basis()[j] * k).trace();
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) += (std::conj(t[i]) * t[j]).real();
  }
  const auto eig = eig_real_symmetric(m);
  CMat2 w;
  for (std::size_t j = 0; j < 4; ++j) w += su2_basis()[j] * cplx(eig.vectors(j, 3), 0.0);
  return {w, std::max(0.0, eig.values[3])};
}

OneWayLoccProtocol synthesize_protocol(const TwoQubitUnitary& u, Scenario s,
                                       double eps) {
  if (s == Scenario::NoRefsEntangled)
    throw Error(ErrorKind::InvalidArgument,
                "no protocol needed without entangled references: states are prepared locally");
  const Decision dec = decide_partial_invertibility(u, s);
  if (!dec.invertible) {
    std::ostringstream msg;
    msg << "KC number " << dec.kc.value << " is not LOCC partially invertible in scenario "
        << to_string(s);
    throw Error(ErrorKind::NotInvertibleInScenario, msg.str());
  }
  const KcDecomposition d = decompose(u, eps);
  OneWayLoccProtocol p;
  if (s == Scenario::OnlyARefEntangled) p.ancilla = QubitState::zero();

  if (dec.kc.value == 0) {
    p.a_corrections = {(d.uA * d.vA).adjoint()};
    return p;
  }

  const CVec2 plus = QubitState::plus().vector();
  const CVec2 minus = QubitState::minus().vector();
  const MeasurementBasis dressed{d.uB * plus, d.uB * minus};

  if (s == Scenario::BothRefsEntangled) {
    // exp(i a XX) = sum_s exp(i s a X) (x) |s><s| over the X eigenbasis, so
    // measuring B in uB|+-> leaves uA exp(+-i a X) vA on A.
    p.b_measurement = projectors(dressed);
    const std::array<CVec2, 2> inputs{d.vB.adjoint() * plus, d.vB.adjoint() * minus};
    for (std::size_t r = 0; r < 2; ++r) {
      const auto ch = induced_kraus(u, QubitState(inputs[r].normalized()), {dressed[r], dressed[1 - r]});
      p.a_corrections.push_back(best_aligning_unitary({ch.kraus[0]}).first);
    }
    return p;
  }

  // A-only: ancilla vB^dagger|+>, measurement in uB|+->; both Kraus operators
  // are proportional to unitaries when az = 0.
  const QubitState phi(d.vB.adjoint() * plus);
  p.ancilla = phi;
  MeasurementBasis basis = dressed;
  if (basis_defect(u, phi, basis) > kProportionalTolerance) {
    std::array<double, 2> best_angles{0.0, 0.0};
    double best = basis_defect(u, phi, basis_from_angles(0.0, 0.0));
    constexpr int kGrid = 32;
    for (int i = 0; i < kGrid; ++i)
      for (int j = 0; j < kGrid; ++j) {
        const std::array<double, 2> a{kPi * (i + 0.5) / kGrid, 2.0 * kPi * j / kGrid};
        const double v = basis_defect(u, phi, basis_from_angles(a[0], a[1]));
        if (v < best) {
          best = v;
          best_angles = a;
        }
      }
    best = -refine(best_angles, kPi / kGrid, 60, [&](const std::array<double, 2>& a) {
      return -basis_defect(u, phi, basis_from_angles(a[0], a[1]));
    });
    if (best > kProportionalTolerance) {
      std::ostringstream msg;
      msg << "no measurement basis with unitary Kraus operators found (best defect " << best << ")";
      throw Error(ErrorKind::SearchFailure, msg.str());
    }
    basis = basis_from_angles(best_angles[0], best_angles[1]);
  }
  p.b_measurement = projectors(basis);
  for (const auto& k : induced_kraus(u, phi, basis).kraus) {
    // A zero-probability branch keeps an identity correction.
    if (k.frobenius_norm() < 1e-12)
      p.a_corrections.push_back(CMat2::identity());
    else
      p.a_corrections.push_back(best_aligning_unitary({k}).first);
  }
  return p;
}

InversionReport simulate_protocol(const QuadState& state, const TwoQubitUnitary& u,
                                  const OneWayLoccProtocol& p, Scenario s,
                                  double tolerance) {
  if (!p.a_corrections.empty() && p.a_corrections.size() != p.outcome_count()) {
    std::ostringstream msg;
    msg << "protocol has " << p.outcome_count() << " outcomes but "
        << p.a_corrections.size() << " corrections";
    throw Error(ErrorKind::DimensionMismatch, msg.str());
  }
  const auto parts = split_product(state);
  const CVecX& target = parts[0];
  const int d_ra = state.d_ra();
  const int d_rb = state.d_rb();
  CVecX input = state.amplitudes();
  if (s == Scenario::OnlyARefEntangled && p.ancilla) {
    const QubitSchmidt sch = qubit_schmidt(parts[1], d_rb);
    if (sch.coefficients[1] > 1e-6)
      throw Error(ErrorKind::InvalidArgument,
                  "B is entangled with its reference; scenario expects an unentangled B");
    const CVecX anc{p.ancilla->a(), p.ancilla->b()};
    input = kron(target, kron(anc, sch.reference_vectors[0]));
  }

  const CVecX evolved = apply_ab(input, d_ra, d_rb, u.matrix());
  const std::size_t d_ar = static_cast<std::size_t>(2 * d_ra);
  const std::size_t d_br = static_cast<std::size_t>(2 * d_rb);

  InversionReport rep{false, 0.0, 0.0, {}};
  std::vector<CVecX> branches;
  CMatX rho_ar(d_ar, d_ar);
  CMatX rho_br(d_br, d_br);
  for (std::size_t r = 0; r < p.outcome_count(); ++r) {
    CVecX psi = apply_b(evolved, d_ra, d_rb, p.measurement(r));
    psi = apply_a(psi, d_ra, d_rb, p.correction(r));
    const double prob = norm(psi) * norm(psi);
    // (<Phi| (x) I) psi
    CVecX proj(d_br);
    for (std::size_t i = 0; i < d_ar; ++i)
      for (std::size_t j = 0; j < d_br; ++j) proj[j] += std::conj(target[i]) * psi[i * d_br + j];
    const double f = norm(proj) * norm(proj);
    rep.fidelity += f;
    rep.outcomes.push_back({prob, prob > 0.0 ? f / prob : 0.0});
    rho_ar += marginal_ar_a(psi, d_ra, d_rb);
    rho_br += marginal_br_b(psi, d_ra, d_rb);
    branches.push_back(std::move(psi));
  }

  if (s == Scenario::BothRefsEntangled) {
    std::vector<WeightedVector> actual;
    for (auto& b : branches) actual.push_back({1.0, b});
    std::vector<WeightedVector> ideal;
    const HermitianEig eig = eig_hermitian(rho_br);
    for (std::size_t j = 0; j < d_br; ++j)
      if (eig.values[j] > 0.0) ideal.push_back({eig.values[j], kron(target, eig.vectors.col(j))});
    rep.residual = trace_distance_low_rank(actual, ideal);
  } else {
    rep.residual = trace_distance(rho_ar, CMatX::outer(target, target));
  }
  rep.achieved = rep.residual < tolerance;
  return rep;
}

SearchResult search_restricted_protocols(const TwoQubitUnitary& u, Scenario s,
                                         const SearchBudget& budget) {
  if (s == Scenario::NoRefsEntangled) return {OneWayLoccProtocol{}, 1.0};
  const int g = std::max(1, budget.basis_grid);
  const std::size_t keep = static_cast<std::size_t>(std::max(1, budget.top_k));

  if (s == Scenario::BothRefsEntangled) {
    const BothRefsOps ops = both_refs_ops(u);
    auto score = [&](const std::array<double, 2>& a) {
      return score_both_refs(ops, basis_from_angles(a[0], a[1]));
    };
    std::vector<std::pair<double, std::array<double, 2>>> cands;
    for (int i = 0; i < g; ++i)
      for (int j = 0; j < g; ++j) {
        const std::array<double, 2> a{kPi * (i + 0.5) / g, 2.0 * kPi * j / g};
        cands.push_back({score(a), a});
      }
    std::sort(cands.begin(), cands.end(), [](auto& x, auto& y) { return x.first > y.first; });
    cands.resize(std::min(keep, cands.size()));
    double best = -1.0;
    std::array<double, 2> best_a{};
    for (auto& c : cands) {
      const double v = refine(c.second, kPi / g, budget.refine_steps, score);
      if (v > best) {
        best = v;
        best_a = c.second;
      }
    }
    const MeasurementBasis m = basis_from_angles(best_a[0], best_a[1]);
    OneWayLoccProtocol p;
    p.b_measurement = projectors(m);
    for (const auto& mr : m) p.a_corrections.push_back(best_aligning_unitary(both_refs_kraus(ops, mr)).first);
    return {p, best};
  }

  // A-only: ancilla grid x basis grid, then refinement over all four angles.
  const int ga = std::max(1, budget.ancilla_grid);
  auto score = [&](const std::array<double, 4>& a) {
    return score_ancilla_case(conditional_ops(u, QubitState::bloch(a[0], a[1])),
                              basis_from_angles(a[2], a[3]));
  };
  std::vector<std::pair<double, std::array<double, 4>>> cands;
  std::vector<MeasurementBasis> bases;
  std::vector<std::array<double, 2>> basis_angles;
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j) {
      basis_angles.push_back({kPi * (i + 0.5) / g, 2.0 * kPi * j / g});
      bases.push_back(basis_from_angles(basis_angles.back()[0], basis_angles.back()[1]));
    }
  for (int i = 0; i < ga; ++i)
    for (int j = 0; j < ga; ++j) {
      const double th = kPi * (i + 0.5) / ga;
      const double ph = 2.0 * kPi * j / ga;
      const auto x = conditional_ops(u, QubitState::bloch(th, ph));
      for (std::size_t b = 0; b < bases.size(); ++b) {
        const double v = score_ancilla_case(x, bases[b]);
        if (cands.size() < keep || v > cands.back().first) {
          cands.push_back({v, {th, ph, basis_angles[b][0], basis_angles[b][1]}});
          std::sort(cands.begin(), cands.end(), [](auto& x1, auto& y1) { return x1.first > y1.first; });
          if (cands.size() > keep) cands.pop_back();
        }
      }
    }
  double best = -1.0;
  std::array<double, 4> best_a{};
  for (auto& c : cands) {
    const double v = refine(c.second, kPi / std::min(ga, g), budget.refine_steps, score);
    if (v > best) {
      best = v;
      best_a = c.second;
    }
  }
  const QubitState phi = QubitState::bloch(best_a[0], best_a[1]);
  const MeasurementBasis m = basis_from_angles(best_a[2], best_a[3]);
  OneWayLoccProtocol p;
  p.ancilla = phi;
  p.b_measurement = projectors(m);
  for (const auto& k : induced_kraus(u, phi, m).kraus)
    p.a_corrections.push_back(best_aligning_unitary({k}).first);
  return {p, best};
}

CMat2 a_marginal_after(const TwoQubitUnitary& u, const QubitState& phi) {
  return partial_trace_second(ar_marginal_after(u, phi), true);
}

CMat2 reference_marginal_after(const TwoQubitUnitary& u, const QubitState& phi) {
  return partial_trace_second(ar_marginal_after(u, phi), false);
}

bool verify_maximal_entanglement_after_U(const TwoQubitUnitary& u, const QubitState& phi,
                                         double eps) {
  const CMat2 rho = a_marginal_after(u, phi);
  return (rho * (1.0 / rho.trace()) - CMat2::identity() * 0.5).frobenius_norm() <= eps;
}

bool verify_reference_marginal_after_U(const TwoQubitUnitary& u, const QubitState& phi,
                                       double eps) {
  const CMat2 rho = reference_marginal_after(u, phi);
  return (rho * (1.0 / rho.trace()) - CMat2::identity() * 0.5).frobenius_norm() <= eps;
}

}  // namespace kcforge
