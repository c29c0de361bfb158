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

// JSON reports. Doubles are written in shortest round-trip form (at most 17
// significant digits), so parsing a report back recovers the exact values.

#include "json.hpp"

#include "kcforge/kak.hpp"
#include "kcforge/locc.hpp"
#include "kcforge/synth.hpp"
#include "kcforge/verify.hpp"

namespace kcforge::cli {

using nlohmann::json;

json to_json(cplx z);
json to_json(const CMat2& m);
json to_json(const CMat4& m);
json to_json(const WeylPoint& w);
json to_json(const KcDecomposition& d);
json to_json(const OneWayLoccProtocol& p);
json to_json(const InversionReport& r);
json to_json(const Factorization& f);
json to_json(const CheckResult& r);

cplx complex_from_json(const json& j);
CMat2 mat2_from_json(const json& j);
CMat4 mat4_from_json(const json& j);
/// Inverse of to_json(KcDecomposition); also accepts a full decompose
/// report, reading its "decomposition" member.
KcDecomposition decomposition_from_json(const json& j);

/// Report for `decompose`: the decomposition, classification, operator
/// Schmidt data, per-scenario decisions and the reconstruction residual.
json decompose_report(const TwoQubitUnitary& u, double eps);
json classify_report(const TwoQubitUnitary& u, double eps);
json decide_report(const TwoQubitUnitary& u, Scenario s);
json synthesize_report(const TwoQubitUnitary& u, Scenario s, double eps);
json factor_report(const TwoQubitUnitary& u, double eps);
json compose_report(const TwoQubitUnitary& u, const TwoQubitUnitary& v);

}  // namespace kcforge::cli
