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

// LOCC partial invertibility of a two-qubit unitary U acting on A and B,
// where A (and possibly B) is entangled with a reference that no one may
// touch. Scenarios:
//   BothRefsEntangled  both A-R_A and B-R_B entangled
//   OnlyARefEntangled  only A-R_A entangled (B starts in a chosen ancilla;
//                      the mirrored B-only case follows by swapping parties)
//   NoRefsEntangled    neither; always invertible
//
// Protocols are one-way: B measures, A applies an outcome-indexed unitary.

#include <optional>
#include <string_view>
#include <vector>

#include "kcforge/channel.hpp"
#include "kcforge/kak.hpp"
#include "kcforge/quad_state.hpp"

namespace kcforge {

enum class Scenario { BothRefsEntangled, OnlyARefEntangled, NoRefsEntangled };

std::string_view to_string(Scenario s);
/// Accepts "both", "a-only", "none" (and the enumerator names).
Scenario parse_scenario(std::string_view text);

struct OneWayLoccProtocol {
  /// Initial B state; only used with OnlyARefEntangled.
  std::optional<QubitState> ancilla;
  /// Measurement operators on B. Empty means "do nothing": a single outcome
  /// with M = I and the first correction (identity if absent).
  std::vector<CMat2> b_measurement;
  std::vector<CMat2> a_corrections;

  std::size_t outcome_count() const;
  CMat2 measurement(std::size_t r) const;
  CMat2 correction(std::size_t r) const;
  /// ||sum M^dagger M - I||_F
  double completeness_defect() const;
  /// max_r ||c_r^dagger c_r - I||_F
  double correction_unitarity_defect() const;
};

struct Decision {
  bool invertible;
  KcNumber kc;
  GateClass gate_class;
};

/// Case (i): KC <= 1; case (ii): KC <= 2; case (iii): always.
Decision decide_partial_invertibility(const TwoQubitUnitary& u, Scenario s,
                                      double eps_zero = kDefaultZeroAngle);

/// Throws NotInvertibleInScenario when the decision is negative,
/// InvalidArgument for NoRefsEntangled (nothing to invert) and
/// SearchFailure if no measurement basis with unitary Kraus operators is
/// found for a core outside the closed-form case.
OneWayLoccProtocol synthesize_protocol(const TwoQubitUnitary& u, Scenario s,
                                       double eps = kDefaultTolerance);

struct OutcomeRecord {
  double probability;
  /// Fidelity of the conditional AR_A state with the target (0 if p = 0).
  double fidelity;
};

struct InversionReport {
  bool achieved;
  double fidelity;
  double residual;
  std::vector<OutcomeRecord> outcomes;
};

/// Runs U then the protocol on `state` and compares with the initial AR_A
/// state Phi. Fidelity is <Phi| rho_AR_A |Phi>. The residual is the trace
/// distance of the final global state to Phi (x) rho'_BR_B (rho' its actual
/// BR_B marginal) in case (i), and of rho_AR_A to Phi otherwise.
/// With OnlyARefEntangled the B qubit is re-prepared in the protocol's
/// ancilla; the input must then have B unentangled with R_B.
InversionReport simulate_protocol(const QuadState& state,
                                  const TwoQubitUnitary& u,
                                  const OneWayLoccProtocol& p, Scenario s,
                                  double tolerance = 1e-8);

struct SearchBudget {
  /// Bloch-sphere grid for the ancilla (grid x grid points).
  int ancilla_grid = 64;
  /// Bloch-sphere grid for the first measurement vector.
  int basis_grid = 8;
  /// Coordinate-descent steps from each retained candidate.
  int refine_steps = 30;
  int top_k = 4;
};

struct SearchResult {
  OneWayLoccProtocol protocol;
  double fidelity;
};

/// Searches rank-1 orthogonal B measurements (and ancillas in case (ii))
/// with the best unitary correction per outcome, scoring the AR_A fidelity
/// for maximally entangled references. A finite search, not a proof.
SearchResult search_restricted_protocols(const TwoQubitUnitary& u, Scenario s,
                                         const SearchBudget& budget = {});

/// Best W in SU(2) maximizing sum_b |Tr(W K_b)|^2; returns W and the value.
std::pair<CMat2, double> best_aligning_unitary(const std::vector<CMat2>& ks);

/// A-marginal of U (Phi~ (x) phi) U^dagger, with Phi~ the normalized
/// maximally entangled A R'_A state.
CMat2 a_marginal_after(const TwoQubitUnitary& u, const QubitState& phi);
/// R'_A marginal of the same state.
CMat2 reference_marginal_after(const TwoQubitUnitary& u, const QubitState& phi);

/// True iff the A-marginal above equals I/2 within eps.
bool verify_maximal_entanglement_after_U(const TwoQubitUnitary& u,
                                         const QubitState& phi,
                                         double eps = 1e-10);
/// True iff the R'_A marginal equals I/2 within eps, i.e. the state is
/// maximally entangled across AB | R'_A.
bool verify_reference_marginal_after_U(const TwoQubitUnitary& u,
                                       const QubitState& phi,
                                       double eps = 1e-10);

}  // namespace kcforge
