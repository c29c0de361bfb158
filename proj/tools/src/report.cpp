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

#include "kcforge_cli/report.hpp"

#include "kcforge/channel.hpp"
#include "kcforge/schmidt.hpp"

namespace kcforge::cli {

namespace {

template <std::size_t N>
json mat_json(const CMat<N>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < N; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < N; ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

template <std::size_t N>
CMat<N> mat_from(const json& j) {
  if (!j.is_array() || j.size() != N)
    throw Error(ErrorKind::ParseError, "matrix has wrong number of rows");
  CMat<N> m;
  for (std::size_t r = 0; r < N; ++r) {
    if (!j[r].is_array() || j[r].size() != N)
      throw Error(ErrorKind::ParseError, "matrix row has wrong length");
    for (std::size_t c = 0; c < N; ++c) m(r, c) = complex_from_json(j[r][c]);
  }
  return m;
}

json scenario_decisions(const TwoQubitUnitary& u) {
  json out = json::object();
  for (const auto& [key, s] : {std::pair{"both", Scenario::BothRefsEntangled},
                               std::pair{"a-only", Scenario::OnlyARefEntangled},
                               std::pair{"none", Scenario::NoRefsEntangled}})
    out[key] = decide_partial_invertibility(u, s).invertible;
  return out;
}

json weyl_name(const WeylPoint& w) {
  const auto name = named_weyl_point(w);
  return name ? json(std::string(*name)) : json(nullptr);
}

}  // namespace

json to_json(cplx z) { return json::array({z.real(), z.imag()}); }
json to_json(const CMat2& m) { return mat_json(m); }
json to_json(const CMat4& m) { return mat_json(m); }
json to_json(const WeylPoint& w) { return json::array({w.x, w.y, w.z}); }

json to_json(const KcDecomposition& d) {
  return {{"uA", to_json(d.uA)},
          {"uB", to_json(d.uB)},
          {"vA", to_json(d.vA)},
          {"vB", to_json(d.vB)},
          {"weyl", to_json(d.weyl)},
          {"global_phase", to_json(d.global_phase)}};
}

json to_json(const OneWayLoccProtocol& p) {
  json j;
  j["ancilla"] = p.ancilla ? json::array({to_json(p.ancilla->a()), to_json(p.ancilla->b())})
                           : json(nullptr);
  j["b_measurement"] = json::array();
  for (const auto& m : p.b_measurement) j["b_measurement"].push_back(to_json(m));
  j["a_corrections"] = json::array();
  for (const auto& c : p.a_corrections) j["a_corrections"].push_back(to_json(c));
  j["completeness_defect"] = p.completeness_defect();
  j["correction_unitarity_defect"] = p.correction_unitarity_defect();
  return j;
}

json to_json(const InversionReport& r) {
  json outcomes = json::array();
  for (const auto& o : r.outcomes)
    outcomes.push_back({{"probability", o.probability}, {"fidelity", o.fidelity}});
  return {{"achieved", r.achieved},
          {"fidelity", r.fidelity},
          {"residual", r.residual},
          {"outcomes", outcomes}};
}

json to_json(const Factorization& f) {
  json factors = json::array();
  for (const auto& x : f.factors)
    factors.push_back({{"theta", x.theta},
                       {"left", {to_json(x.left.a), to_json(x.left.b)}},
                       {"right", {to_json(x.right.a), to_json(x.right.b)}}});
  return {{"factors", factors},
          {"locals", {to_json(f.locals.a), to_json(f.locals.b)}},
          {"global_phase", to_json(f.global_phase)}};
}

json to_json(const CheckResult& r) {
  return {{"id", r.id}, {"title", r.title}, {"passed", r.passed},
          {"detail", r.detail}, {"seconds", r.seconds}};
}

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw Error(ErrorKind::ParseError, "expected a [re, im] pair");
  return {j[0].get<double>(), j[1].get<double>()};
}

CMat2 mat2_from_json(const json& j) { return mat_from<2>(j); }
CMat4 mat4_from_json(const json& j) { return mat_from<4>(j); }

KcDecomposition decomposition_from_json(const json& j) {
  const json& d = j.contains("decomposition") ? j.at("decomposition") : j;
  try {
    KcDecomposition out;
    out.uA = mat2_from_json(d.at("uA"));
    out.uB = mat2_from_json(d.at("uB"));
    out.vA = mat2_from_json(d.at("vA"));
    out.vB = mat2_from_json(d.at("vB"));
    const json& w = d.at("weyl");
    out.weyl = {w.at(0).get<double>(), w.at(1).get<double>(), w.at(2).get<double>()};
    out.global_phase = complex_from_json(d.at("global_phase"));
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("malformed decomposition: ") + e.what());
  }
}

json decompose_report(const TwoQubitUnitary& u, double eps) {
  const KcDecomposition d = decompose(u, eps);
  const OperatorSchmidt sch = operator_schmidt(u);
  json j;
  j["command"] = "decompose";
  j["input"] = to_json(u.matrix());
  j["decomposition"] = to_json(d);
  j["weyl"] = to_json(d.weyl);
  j["weyl_name"] = weyl_name(d.weyl);
  j["kc_number"] = kc_number(d).value;
  j["gate_class"] = std::string(to_string(classify(d)));
  j["operator_schmidt"] = {{"coefficients", sch.coefficients},
                           {"number", operator_schmidt_number(u)}};
  j["decisions"] = scenario_decisions(u);
  j["residual"] = (reconstruct(d).matrix() - u.matrix()).frobenius_norm();
  return j;
}

json classify_report(const TwoQubitUnitary& u, double eps) {
  const KcDecomposition d = decompose(u, eps);
  const MakhlinInvariants g = makhlin_invariants(u);
  json j;
  j["command"] = "classify";
  j["weyl"] = to_json(d.weyl);
  j["weyl_name"] = weyl_name(d.weyl);
  j["kc_number"] = kc_number(d).value;
  j["gate_class"] = std::string(to_string(classify(d)));
  j["operator_schmidt_number"] = operator_schmidt_number(u);
  j["makhlin"] = {{"g1", to_json(g.g1)}, {"g2", g.g2}};
  return j;
}

json decide_report(const TwoQubitUnitary& u, Scenario s) {
  const Decision dec = decide_partial_invertibility(u, s);
  json j;
  j["command"] = "decide";
  j["scenario"] = std::string(to_string(s));
  j["decision"] = dec.invertible;
  j["kc_number"] = dec.kc.value;
  j["gate_class"] = std::string(to_string(dec.gate_class));
  if (s == Scenario::OnlyARefEntangled) {
    const UnitalInput in = exists_unital_input(u);
    j["unital_witness"] = in.witness
        ? json::array({to_json(in.witness->a()), to_json(in.witness->b())})
        : json(nullptr);
  }
  return j;
}

json synthesize_report(const TwoQubitUnitary& u, Scenario s, double eps) {
  const OneWayLoccProtocol p = synthesize_protocol(u, s, eps);
  const CVecX ref_b = s == Scenario::BothRefsEntangled ? maximally_entangled(2) : CVecX{1.0, 0.0};
  const int d_rb = s == Scenario::BothRefsEntangled ? 2 : 1;
  const QuadState input = QuadState::product(maximally_entangled(2), 2, ref_b, d_rb);
  json j;
  j["command"] = "synthesize";
  j["scenario"] = std::string(to_string(s));
  j["protocol"] = to_json(p);
  j["simulation"] = to_json(simulate_protocol(input, u, p, s));
  return j;
}

json factor_report(const TwoQubitUnitary& u, double eps) {
  const Factorization f = factor_into_controlled(u, eps);
  json j = to_json(f);
  j["command"] = "factor";
  j["kc_number"] = kc_number(u).value;
  j["residual"] = (f.product() - u.matrix()).frobenius_norm();
  return j;
}

json compose_report(const TwoQubitUnitary& u, const TwoQubitUnitary& v) {
  const CompositionCheck c = check_composition_bounds(u, v);
  return {{"command", "compose"},
          {"kc_u", c.ku.value},
          {"kc_v", c.kv.value},
          {"kc_uv", c.kuv.value},
          {"bounds_hold", c.bounds_hold},
          {"dagger_invariant", c.dagger_invariant},
          {"holds", c.holds()}};
}

}  // namespace kcforge::cli
