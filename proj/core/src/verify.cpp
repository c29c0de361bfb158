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

#include "kcforge/verify.hpp"

#include <chrono>
#include <cmath>
#include <set>
#include <sstream>
#include <utility>

#include "kcforge/channel.hpp"
#include "kcforge/kak.hpp"
#include "kcforge/locc.hpp"
#include "kcforge/sampling.hpp"
#include "kcforge/schmidt.hpp"
#include "kcforge/synth.hpp"

namespace kcforge {

namespace {

int count_or(const VerifyOptions& o, int fallback) {
  return o.samples > 0 ? o.samples : fallback;
}

// Runs body(result) with timing; library errors become failures.
template <typename F>
CheckResult timed(std::string id, std::string title, F&& body) {
  CheckResult r;
  r.id = std::move(id);
  r.title = std::move(title);
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const std::exception& e) {
    r.passed = false;
    r.detail += std::string(r.detail.empty() ? "" : "; ") + "error: " + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

enum Stream : std::uint64_t {
  kRoundTrip = 1,
  kInvariance,
  kTable,
  kFormula,
  kAOnly,
  kAOnlyFalse,
  kBoth,
  kBothFalse,
  kControlled,
  kComposition,
  kMarginal,
  kRefMarginal,
  kMakhlin,
  kMonotone,
};

}  // namespace

CheckResult check_round_trip(const VerifyOptions& o) {
  return timed("round-trip", "decompose/reconstruct round trip on Haar unitaries", [&](CheckResult& r) {
    const int n = count_or(o, 1000);
    double worst = 0.0;
    int bad = 0;
    for (int i = 0; i < n; ++i) {
      Rng rng = sample_rng(o.seed, kRoundTrip, static_cast<std::uint64_t>(i));
      const TwoQubitUnitary u(haar_unitary4(rng));
      const KcDecomposition d = decompose(u);
      const double res = (reconstruct(d).matrix() - u.matrix()).frobenius_norm();
      worst = std::max(worst, res);
      if (!(res < 1e-8) || !d.weyl.in_chamber()) ++bad;
    }
    r.passed = bad == 0;
    r.detail = std::to_string(n) + " samples, worst residual " + fmt(worst) + ", failures " +
               std::to_string(bad);
  });
}

CheckResult check_weyl_local_invariance(const VerifyOptions& o) {
  return timed("weyl-invariance", "Weyl point invariant under local dressing", [&](CheckResult& r) {
    const int n = count_or(o, 500);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      Rng rng = sample_rng(o.seed, kInvariance, static_cast<std::uint64_t>(i));
      const CMat4 u = haar_unitary4(rng);
      const CMat4 v = random_locals(rng).tensor() * u * random_locals(rng).tensor();
      const auto a = decompose(TwoQubitUnitary(u)).weyl.as_array();
      const auto b = decompose(TwoQubitUnitary(v)).weyl.as_array();
      for (std::size_t k = 0; k < 3; ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    }
    r.passed = worst < 1e-8;
    r.detail = std::to_string(n) + " pairs, worst componentwise difference " + fmt(worst);
  });
}

CheckResult check_classification_table(const VerifyOptions& o) {
  return timed("classification-table", "(KC number, operator Schmidt number) pairs", [&](CheckResult& r) {
    const int per = count_or(o, 100);
    std::set<std::pair<int, int>> seen;
    int threes = 0, wrong_kc = 0;
    for (int k = 0; k < 4; ++k)
      for (int i = 0; i < per; ++i) {
        Rng rng = sample_rng(o.seed, kTable, static_cast<std::uint64_t>(k * per + i));
        const TwoQubitUnitary u(random_kc_unitary(k, rng));
        const int kc = kc_number(u).value;
        if (kc != k) ++wrong_kc;
        int osn = 0;
        try {
          osn = operator_schmidt_number(u);
        } catch (const Error& e) {
          if (e.kind() != ErrorKind::DegenerateCount) throw;
          osn = 3;
        }
        if (osn == 3) ++threes;
        seen.insert({kc, osn});
      }
    const std::set<std::pair<int, int>> expected{{0, 1}, {1, 2}, {2, 4}, {3, 4}};
    r.passed = seen == expected && threes == 0 && wrong_kc == 0;
    std::ostringstream s;
    s << per << " per class; observed";
    for (const auto& p : seen) s << " (" << p.first << "," << p.second << ")";
    s << "; Schmidt number 3: " << threes << "; KC mismatches: " << wrong_kc;
    r.detail = s.str();
  });
}

CheckResult check_unitality_formula(const VerifyOptions& o) {
  return timed("unitality-formula", "closed-form vs brute-force Gamma(I)", [&](CheckResult& r) {
    const int n = count_or(o, 1000);
    double worst = 0.0, trace_dev = 0.0;
    for (int i = 0; i < n; ++i) {
      Rng rng = sample_rng(o.seed, kFormula, static_cast<std::uint64_t>(i));
      const WeylPoint w = random_weyl_with_kc(3, rng, 0.0);
      const WeylPoint ws{w.x, w.y, rng() % 2 ? w.z : -w.z};
      const QubitState phi = random_qubit_state(rng);
      const UnitalityMatrix a = unitality_matrix_closed_form(ws, phi);
      const UnitalityMatrix b = unitality_matrix_brute(build_canonical(ws), phi);
      worst = std::max(worst, (a.matrix() - b.matrix()).max_abs());
      trace_dev = std::max(trace_dev, std::abs(b.g11 + b.g22 - 2.0));
    }
    r.passed = worst < 1e-12 && trace_dev < 1e-12;
    r.detail = std::to_string(n) + " draws, worst entry difference " + fmt(worst) +
               ", worst |g11 + g22 - 2| " + fmt(trace_dev);
  });
}

CheckResult check_a_only_inversion(const VerifyOptions& o) {
  return timed("a-only-inversion", "A-only scenario: KC <= 2 protocols restore AR_A", [&](CheckResult& r) {
    const int n = count_or(o, 200);
    double worst_fid = 0.0, worst_meas = 0.0, worst_corr = 0.0;
    for (int i = 0; i < n; ++i) {
      Rng rng = sample_rng(o.seed, kAOnly, static_cast<std::uint64_t>(i));
      const TwoQubitUnitary u(random_kc_unitary(i % 3, rng));
      const OneWayLoccProtocol p = synthesize_protocol(u, Scenario::OnlyARefEntangled);
      worst_meas = std::max(worst_meas, p.completeness_defect());
      worst_corr = std::max(worst_corr, p.correction_unitarity_defect());
      const CVecX ket0{1.0, 0.0};
      const QuadState maximal = QuadState::product(maximally_entangled(2), 2, ket0, 1);
      const int d_ra = 2 + i % 7;
      const QuadState partial = QuadState::product(random_rank2_pair(d_ra, rng), d_ra, ket0, 1);
      const QuadState reduced = reduce_reference(partial, Side::A).reduced;
      for (const QuadState* s : {&maximal, &partial, &reduced}) {
        const auto rep = simulate_protocol(*s, u, p, Scenario::OnlyARefEntangled);
        worst_fid = std::max(worst_fid, 1.0 - rep.fidelity);
      }
    }
    r.passed = worst_fid <= 1e-8 && worst_meas <= 1e-10 && worst_corr <= 1e-10;
    r.detail = std::to_string(n) + " unitaries x 3 inputs, worst 1 - F " + fmt(worst_fid) +
               ", completeness " + fmt(worst_meas) + ", correction unitarity " + fmt(worst_corr);
  });
}

CheckResult check_a_only_falsifier(const VerifyOptions& o) {
  return timed("a-only-falsifier", "A-only scenario: KC = 3 has no unital input and no good protocol",
               [&](CheckResult& r) {
    const int n = count_or(o, 50);
    double min_dev = 1e300, best_fid = 0.0;
    for (int i = 0; i < n; ++i) {
      Rng rng = sample_rng(o.seed, kAOnlyFalse, static_cast<std::uint64_t>(i));
      const TwoQubitUnitary u(random_kc_unitary(3, rng, 0.1));
      min_dev = std::min(min_dev, minimize_unitality_deviation(u).min_deviation);
      best_fid = std::max(best_fid,
                          search_restricted_protocols(u, Scenario::OnlyARefEntangled).fidelity);
    }
    r.passed = min_dev > 1e-6 && best_fid < 1.0 - 1e-3;
    r.detail = std::to_string(n) + " unitaries, min ||Gamma(I) - I|| " + fmt(min_dev) +
               ", best restricted fidelity " + std::to_string(best_fid);
  });
}

CheckResult check_both_refs_inversion(const VerifyOptions& o) {
  return timed("both-refs-inversion", "both-refs scenario: controlled-phase protocols restore AR_A in product form",
               [&](CheckResult& r) {
    const int n = count_or(o, 200);
    double worst_fid = 0.0, worst_res = 0.0, worst_meas = 0.0, worst_corr = 0.0;
    for (int i = 0; i < n; ++i) {
      Rng rng = sample_rng(o.seed, kBoth, static_cast<std::uint64_t>(i));
      const TwoQubitUnitary u(random_dressed_controlled_phase(rng));
      const OneWayLoccProtocol p = synthesize_protocol(u, Scenario::BothRefsEntangled);
      worst_meas = std::max(worst_meas, p.completeness_defect());
      worst_corr = std::max(worst_corr, p.correction_unitarity_defect());
      const QuadState maximal =
          QuadState::product(maximally_entangled(2), 2, maximally_entangled(2), 2);
      const int d_ra = 2 + i % 7;
      const int d_rb = 2 + (i / 7) % 7;
      const QuadState partial = QuadState::product(random_rank2_pair(d_ra, rng), d_ra,
                                                   random_rank2_pair(d_rb, rng), d_rb);
      const QuadState reduced =
          reduce_reference(reduce_reference(partial, Side::A).reduced, Side::B).reduced;
      for (const QuadState* s : {&maximal, &partial, &reduced}) {
        const auto rep = simulate_protocol(*s, u, p, Scenario::BothRefsEntangled);
        worst_fid = std::max(worst_fid, 1.0 - rep.fidelity);
        worst_res = std::max(worst_res, rep.residual);
      }
    }
    r.passed = worst_fid <= 1e-8 && worst_res < 1e-8 && worst_meas <= 1e-10 && worst_corr <= 1e-10;
    r.detail = std::to_string(n) + " unitaries x 3 inputs, worst 1 - F " + fmt(worst_fid) +
               ", worst product-form residual " + fmt(worst_res);
  });
}

CheckResult check_both_refs_falsifier(const VerifyOptions& o) {
  return timed("both-refs-falsifier", "both-refs scenario: KC = 2 has no good restricted protocol",
               [&](CheckResult& r) {
    const int n = count_or(o, 50);
    double best_fid = 0.0;
    for (int i = 0; i < n; ++i) {
      Rng rng = sample_rng(o.seed, kBothFalse, static_cast<std::uint64_t>(i));
      const TwoQubitUnitary u(random_kc_unitary(2, rng, 0.1));
      best_fid = std::max(best_fid,
                          search_restricted_protocols(u, Scenario::BothRefsEntangled).fidelity);
    }
    r.passed = best_fid < 1.0 - 1e-3;
    r.detail = std::to_string(n) + " unitaries, best restricted fidelity " + std::to_string(best_fid);
  });
}

CheckResult check_controlled_products(const VerifyOptions& o) {
  return timed("controlled-products", "products of controlled unitaries and controlled-phase factorizations",
               [&](CheckResult& r) {
    const int n = count_or(o, 500);
    int pair_over = 0, triple_over = 0, wrong_count = 0, ry_over = 0;
    double worst = 0.0;
    auto check_factoring = [&](const TwoQubitUnitary& u) {
      const Factorization f = factor_into_controlled(u);
      if (static_cast<int>(f.factors.size()) != kc_number(u).value) ++wrong_count;
      worst = std::max(worst, (f.product() - u.matrix()).frobenius_norm());
    };
    for (int i = 0; i < n; ++i) {
      Rng rng = sample_rng(o.seed, kControlled, static_cast<std::uint64_t>(i));
      const TwoQubitUnitary a(random_controlled_unitary(rng));
      const TwoQubitUnitary b(random_controlled_unitary(rng));
      const TwoQubitUnitary c(random_controlled_unitary(rng));
      const TwoQubitUnitary ab = a * b;
      if (kc_number(ab).value > 2) ++pair_over;
      if (kc_number(ab * c).value > 3) ++triple_over;
      check_factoring(a);
      check_factoring(ab);
      check_factoring(TwoQubitUnitary(random_kc_unitary(i % 4, rng)));
      const double t1 = uniform(rng, 0, 2 * kPi), t2 = uniform(rng, 0, 2 * kPi);
      const double p1 = uniform(rng, 0, 2 * kPi), p2 = uniform(rng, 0, 2 * kPi);
      if (verify_two_controlled_product(t1, t2, p1, p2).value > 2) ++ry_over;
    }
    r.passed = pair_over == 0 && triple_over == 0 && wrong_count == 0 && ry_over == 0 && worst < 1e-8;
    r.detail = std::to_string(n) + " draws; KC(UV) > 2: " + std::to_string(pair_over) +
               ", KC(UVW) > 3: " + std::to_string(triple_over) + ", C_p Ry C_p > 2: " +
               std::to_string(ry_over) + ", factor-count mismatches: " + std::to_string(wrong_count) +
               ", worst factorization residual " + fmt(worst);
  });
}

CheckResult check_kc_composition(const VerifyOptions& o) {
  return timed("composition-bounds", "KC composition bounds and dagger invariance", [&](CheckResult& r) {
    const int n = count_or(o, 500);
    int bound_fail = 0, dagger_fail = 0;
    std::set<std::pair<int, int>> cells;
    for (int i = 0; i < n; ++i) {
      Rng rng = sample_rng(o.seed, kComposition, static_cast<std::uint64_t>(i));
      const int ku = i % 4, kv = (i / 4) % 4;
      const TwoQubitUnitary u(random_kc_unitary(ku, rng));
      const TwoQubitUnitary v(random_kc_unitary(kv, rng));
      const CompositionCheck c = kcforge::check_composition_bounds(u, v);
      cells.insert({c.ku.value, c.kv.value});
      if (!c.bounds_hold) ++bound_fail;
      if (!c.dagger_invariant) ++dagger_fail;
    }
    r.passed = bound_fail == 0 && dagger_fail == 0 && (n < 16 || cells.size() == 16);
    r.detail = std::to_string(n) + " pairs over " + std::to_string(cells.size()) +
               " (kU, kV) cells; bound failures " + std::to_string(bound_fail) +
               ", dagger failures " + std::to_string(dagger_fail);
  });
}

CheckResult check_a_marginal_after_u(const VerifyOptions& o) {
  return timed("a-marginal-after-u", "A-marginal of U(Phi~ x phi)U^dagger equals I/2", [&](CheckResult& r) {
    const int n = count_or(o, 200);
    int bad = 0;
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      Rng rng = sample_rng(o.seed, kMarginal, static_cast<std::uint64_t>(i));
      const TwoQubitUnitary u(haar_unitary4(rng));
      const QubitState phi = random_qubit_state(rng);
      const CMat2 rho = a_marginal_after(u, phi);
      worst = std::max(worst, (rho - CMat2::identity() * 0.5).frobenius_norm());
      if (!verify_maximal_entanglement_after_U(u, phi, 1e-10)) ++bad;
    }
    r.passed = bad == 0;
    r.detail = std::to_string(n) + " draws, violations " + std::to_string(bad) +
               ", worst ||rho_A - I/2||_F " + fmt(worst);
  });
}

CheckResult check_reference_marginal_after_u(const VerifyOptions& o) {
  return timed("reference-marginal-after-u",
               "R'_A marginal equals I/2; A-marginal equals I/2 with the unital witness",
               [&](CheckResult& r) {
    const int n = count_or(o, 200);
    int bad_ref = 0, bad_witness = 0;
    for (int i = 0; i < n; ++i) {
      Rng rng = sample_rng(o.seed, kRefMarginal, static_cast<std::uint64_t>(i));
      const TwoQubitUnitary u(haar_unitary4(rng));
      if (!verify_reference_marginal_after_U(u, random_qubit_state(rng), 1e-10)) ++bad_ref;
      const TwoQubitUnitary w(random_kc_unitary(i % 3, rng));
      const UnitalInput in = exists_unital_input(w);
      if (!in.exists || !verify_maximal_entanglement_after_U(w, *in.witness, 1e-10)) ++bad_witness;
    }
    r.passed = bad_ref == 0 && bad_witness == 0;
    r.detail = std::to_string(n) + " draws; R'_A violations " + std::to_string(bad_ref) +
               ", witness A-marginal violations " + std::to_string(bad_witness);
  });
}

CheckResult check_makhlin_invariance(const VerifyOptions& o) {
  return timed("makhlin-invariance", "Makhlin invariants: local invariance and agreement with the core",
               [&](CheckResult& r) {
    const int n = count_or(o, 200);
    double worst = 0.0;
    for (int i = 0; i < n; ++i) {
      Rng rng = sample_rng(o.seed, kMakhlin, static_cast<std::uint64_t>(i));
      const TwoQubitUnitary u(haar_unitary4(rng));
      const TwoQubitUnitary v(random_locals(rng).tensor() * u.matrix() * random_locals(rng).tensor());
      const TwoQubitUnitary core = build_canonical(decompose(u).weyl);
      const auto a = makhlin_invariants(u), b = makhlin_invariants(v), c = makhlin_invariants(core);
      worst = std::max({worst, std::abs(a.g1 - b.g1), std::abs(a.g2 - b.g2),
                        std::abs(a.g1 - c.g1), std::abs(a.g2 - c.g2)});
    }
    r.passed = worst < 1e-8;
    r.detail = std::to_string(n) + " draws, worst invariant difference " + fmt(worst);
  });
}

CheckResult check_scenario_monotonicity(const VerifyOptions& o) {
  return timed("scenario-monotonicity", "decision(both) => decision(a-only) => decision(none)",
               [&](CheckResult& r) {
    const int n = count_or(o, 200);
    int bad = 0;
    for (int i = 0; i < n; ++i) {
      Rng rng = sample_rng(o.seed, kMonotone, static_cast<std::uint64_t>(i));
      const TwoQubitUnitary u(random_kc_unitary(i % 4, rng));
      const bool d1 = decide_partial_invertibility(u, Scenario::BothRefsEntangled).invertible;
      const bool d2 = decide_partial_invertibility(u, Scenario::OnlyARefEntangled).invertible;
      const bool d3 = decide_partial_invertibility(u, Scenario::NoRefsEntangled).invertible;
      if ((d1 && !d2) || (d2 && !d3) || !d3) ++bad;
    }
    r.passed = bad == 0;
    r.detail = std::to_string(n) + " draws, violations " + std::to_string(bad);
  });
}

const std::vector<CheckEntry>& all_checks() {
  static const std::vector<CheckEntry> checks{
      {"round-trip", check_round_trip},
      {"weyl-invariance", check_weyl_local_invariance},
      {"classification-table", check_classification_table},
      {"unitality-formula", check_unitality_formula},
      {"a-only-inversion", check_a_only_inversion},
      {"a-only-falsifier", check_a_only_falsifier},
      {"both-refs-inversion", check_both_refs_inversion},
      {"both-refs-falsifier", check_both_refs_falsifier},
      {"controlled-products", check_controlled_products},
      {"composition-bounds", check_kc_composition},
      {"a-marginal-after-u", check_a_marginal_after_u},
      {"reference-marginal-after-u", check_reference_marginal_after_u},
      {"makhlin-invariance", check_makhlin_invariance},
      {"scenario-monotonicity", check_scenario_monotonicity},
  };
  return checks;
}

}  // namespace kcforge
