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

#include "kcforge_cli/app.hpp"

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "kcforge/error.hpp"
#include "kcforge/verify.hpp"
#include "kcforge_cli/gate_spec.hpp"
#include "kcforge_cli/report.hpp"

namespace kcforge::cli {

namespace {

struct GateOptions {
  std::string gate;
  std::string matrix_file;
  double tolerance = kDefaultTolerance;
  bool json = false;
};

void add_gate_options(CLI::App* cmd, GateOptions& o) {
  cmd->add_option("--gate", o.gate, "Gate specification, e.g. CNOT, CP(pi/2), CANONICAL(0.3,0.2,0.1)");
  cmd->add_option("--matrix-file", o.matrix_file, "File with 4 lines of 4 complex entries (re+imj)");
  cmd->add_option("--tolerance", o.tolerance, "Absolute tolerance on 4x4 Frobenius norms")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--json", o.json, "Emit a JSON report");
}

TwoQubitUnitary load_gate(const GateOptions& o) {
  if (o.gate.empty() == o.matrix_file.empty())
    throw Error(ErrorKind::InvalidArgument, "give exactly one of --gate or --matrix-file");
  return o.gate.empty() ? read_matrix_file(o.matrix_file, o.tolerance)
                        : parse_gate_spec(o.gate, o.tolerance);
}

void print_value(std::ostream& out, const json& v) {
  if (v.is_number_float()) {
    out << std::setprecision(17) << v.get<double>();
  } else if (v.is_array() && !v.empty() && v[0].is_number()) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) out << ' ';
      print_value(out, v[k]);
    }
  } else if (v.is_string()) {
    out << v.get<std::string>();
  } else {
    out << v.dump();
  }
}

// Text form: one "key: value" line per top-level member.
void print_report(std::ostream& out, const json& j, bool as_json) {
  if (as_json) {
    out << j.dump(2) << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) {
    if (key == "command") continue;
    out << key << ": ";
    print_value(out, value);
    out << '\n';
  }
}

std::uint64_t seed_from_env(std::uint64_t fallback) {
  if (const char* s = std::getenv("KCFORGE_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw Error(ErrorKind::InvalidArgument, std::string("KCFORGE_SEED is not an integer: ") + s);
    }
  }
  return fallback;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-qubit unitary analysis: Kraus-Cirac decomposition, classification, "
               "LOCC partial invertibility and controlled-phase synthesis",
               "kcforge"};
  app.require_subcommand(1);

  GateOptions gate;
  auto* decompose_cmd = app.add_subcommand("decompose", "Kraus-Cirac decomposition of a gate");
  add_gate_options(decompose_cmd, gate);
  auto* classify_cmd = app.add_subcommand("classify", "KC number, gate class and invariants");
  add_gate_options(classify_cmd, gate);

  std::string scenario = "a-only";
  auto* decide_cmd = app.add_subcommand("decide", "Decide LOCC partial invertibility");
  add_gate_options(decide_cmd, gate);
  decide_cmd->add_option("--scenario", scenario, "both | a-only | none")
      ->check(CLI::IsMember({"both", "a-only", "none"}));
  auto* synth_cmd = app.add_subcommand("synthesize", "Synthesize a one-way LOCC inversion protocol");
  add_gate_options(synth_cmd, gate);
  synth_cmd->add_option("--scenario", scenario, "both | a-only")
      ->check(CLI::IsMember({"both", "a-only", "none"}));

  auto* factor_cmd = app.add_subcommand("factor", "Factor into dressed controlled-phase gates");
  add_gate_options(factor_cmd, gate);

  std::string spec_u, spec_v;
  auto* compose_cmd = app.add_subcommand("compose", "KC composition bounds for the product U V");
  compose_cmd->add_option("U", spec_u, "First gate specification")->required();
  compose_cmd->add_option("V", spec_v, "Second gate specification")->required();
  compose_cmd->add_option("--tolerance", gate.tolerance, "Absolute tolerance")
      ->check(CLI::PositiveNumber);
  compose_cmd->add_flag("--json", gate.json, "Emit a JSON report");

  std::optional<std::uint64_t> seed;
  int samples = 0;
  std::vector<std::string> only, skip;
  bool list = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run the randomized property suites");
  verify_cmd->add_option("--seed", seed, "Random seed (default: KCFORGE_SEED or built-in)");
  verify_cmd->add_option("--samples", samples, "Samples per check (0: per-check defaults)")
      ->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--only", only, "Run only these check ids")->delimiter(',');
  verify_cmd->add_option("--skip", skip, "Skip these check ids")->delimiter(',');
  verify_cmd->add_flag("--list", list, "List check ids and exit");
  verify_cmd->add_flag("--json", gate.json, "Emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*verify_cmd) {
      const auto& checks = all_checks();
      if (list) {
        for (const auto& c : checks) out << c.id << '\n';
        return kExitOk;
      }
      auto listed = [](const std::vector<std::string>& ids, const std::string& id) {
        return std::find(ids.begin(), ids.end(), id) != ids.end();
      };
      for (const auto& id : only)
        if (std::none_of(checks.begin(), checks.end(), [&](const CheckEntry& c) { return c.id == id; }))
          throw Error(ErrorKind::InvalidArgument, "unknown check id '" + id + "'");
      VerifyOptions opts;
      opts.seed = seed ? *seed : seed_from_env(opts.seed);
      opts.samples = samples;
      json results = json::array();
      bool all_passed = true;
      for (const auto& c : checks) {
        if (!only.empty() && !listed(only, c.id)) continue;
        if (listed(skip, c.id)) continue;
        const CheckResult r = c.run(opts);
        all_passed = all_passed && r.passed;
        if (gate.json) {
          results.push_back(to_json(r));
        } else {
          out << (r.passed ? "PASS " : "FAIL ") << r.id << " (" << std::fixed
              << std::setprecision(2) << r.seconds << " s): " << r.detail << '\n';
          out.unsetf(std::ios::floatfield);
        }
      }
      if (gate.json)
        out << json{{"command", "verify"}, {"seed", opts.seed}, {"passed", all_passed},
                    {"checks", results}}.dump(2)
            << '\n';
      else
        out << (all_passed ? "all checks passed" : "some checks FAILED") << " (seed " << opts.seed
            << ")\n";
      return all_passed ? kExitOk : kExitCheckFailed;
    }

    if (*compose_cmd) {
      const TwoQubitUnitary u = parse_gate_spec(spec_u, gate.tolerance);
      const TwoQubitUnitary v = parse_gate_spec(spec_v, gate.tolerance);
      print_report(out, compose_report(u, v), gate.json);
      return kExitOk;
    }

    const TwoQubitUnitary u = load_gate(gate);
    json report;
    if (*decompose_cmd) report = decompose_report(u, gate.tolerance);
    else if (*classify_cmd) report = classify_report(u, gate.tolerance);
    else if (*decide_cmd) report = decide_report(u, parse_scenario(scenario));
    else if (*synth_cmd) report = synthesize_report(u, parse_scenario(scenario), gate.tolerance);
    else report = factor_report(u, gate.tolerance);
    print_report(out, report, gate.json);
    return kExitOk;
  } catch (const Error& e) {
    err << "kcforge: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return is_validation_error(e.kind()) ? kExitValidation : kExitNumerical;
  } catch (const std::exception& e) {
    err << "kcforge: internal error: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace kcforge::cli
