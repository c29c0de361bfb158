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

// Randomized property checks over the whole library. Each check is
// deterministic for a given seed.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace kcforge {

struct VerifyOptions {
  std::uint64_t seed = 20260401;
  /// Sample count override for every check; 0 keeps each check's default.
  int samples = 0;
};

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

using CheckFn = std::function<CheckResult(const VerifyOptions&)>;

struct CheckEntry {
  std::string id;
  CheckFn run;
};

CheckResult check_round_trip(const VerifyOptions& o);
CheckResult check_weyl_local_invariance(const VerifyOptions& o);
CheckResult check_classification_table(const VerifyOptions& o);
CheckResult check_unitality_formula(const VerifyOptions& o);
CheckResult check_a_only_inversion(const VerifyOptions& o);
CheckResult check_a_only_falsifier(const VerifyOptions& o);
CheckResult check_both_refs_inversion(const VerifyOptions& o);
CheckResult check_both_refs_falsifier(const VerifyOptions& o);
CheckResult check_controlled_products(const VerifyOptions& o);
CheckResult check_kc_composition(const VerifyOptions& o);
/// A-marginal of U (Phi~ (x) phi) U^dagger equal to I/2 for random U, phi.
CheckResult check_a_marginal_after_u(const VerifyOptions& o);
/// R'_A marginal equal to I/2 for random U, phi; A-marginal equal to I/2
/// for KC <= 2 with the unital witness.
CheckResult check_reference_marginal_after_u(const VerifyOptions& o);
CheckResult check_makhlin_invariance(const VerifyOptions& o);
CheckResult check_scenario_monotonicity(const VerifyOptions& o);

/// All checks in a fixed order.
const std::vector<CheckEntry>& all_checks();

}  // namespace kcforge
