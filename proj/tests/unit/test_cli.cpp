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

#include <sstream>
#include <string>
#include <vector>

#include <catch_amalgamated.hpp>

#include "kcforge/synth.hpp"
#include "kcforge_cli/app.hpp"
#include "kcforge_cli/gate_spec.hpp"
#include "kcforge_cli/report.hpp"
#include "test_util.hpp"

using namespace kcforge;
using namespace kcforge::cli;
using namespace kcforge::test;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "kcforge");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data_file(const char* name) { return std::string(KCFORGE_TEST_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("gate specifications") {
  CHECK((parse_gate_spec("CP(pi)").matrix() - CMat4::diagonal(CVec4{1.0, 1.0, 1.0, -1.0})).frobenius_norm() < 1e-15);
  CHECK((parse_gate_spec("cz").matrix() - parse_gate_spec("CP(pi)").matrix()).frobenius_norm() < 1e-15);
  CHECK((parse_gate_spec("CNOT").matrix() - cnot()).frobenius_norm() == 0.0);
  CHECK((parse_gate_spec("swap").matrix() - swap_gate()).frobenius_norm() == 0.0);
  CHECK((parse_gate_spec("ISWAP").matrix() - iswap()).frobenius_norm() < 1e-15);
  CHECK((parse_gate_spec("CANONICAL(0.3,0.2,0.1)").matrix() - build_canonical(0.3, 0.2, 0.1).matrix())
            .frobenius_norm() < 1e-15);
  CHECK((parse_gate_spec("CANONICAL(pi/4, pi/8, -0.1)").matrix() -
         build_canonical(kPi / 4, kPi / 8, -0.1).matrix())
            .frobenius_norm() < 1e-15);
  const std::string nested =
      "[[[1,0],[0,0],[0,0],[0,0]],[[0,0],[1,0],[0,0],[0,0]],"
      "[[0,0],[0,0],[0,0],[1,0]],[[0,0],[0,0],[1,0],[0,0]]]";
  CHECK((parse_gate_spec(nested).matrix() - cnot()).frobenius_norm() == 0.0);
  const std::string flat =
      "[[1,0],[0,0],[0,0],[0,0], [0,0],[1,0],[0,0],[0,0],"
      " [0,0],[0,0],[0,0],[1,0], [0,0],[0,0],[1,0],[0,0]]";
  CHECK((parse_gate_spec(flat).matrix() - cnot()).frobenius_norm() == 0.0);
  const std::string iz = "[[1,0],[0,0],[0,0],[0,0], [0,0],[0,1],[0,0],[0,0],"
                         " [0,0],[0,0],[1,0],[0,0], [0,0],[0,0],[0,0],[0,-1]]";
  CHECK((parse_gate_spec(iz).matrix() - CMat4::diagonal(CVec4{1.0, kI, 1.0, -kI})).frobenius_norm() == 0.0);
}

TEST_CASE("malformed gate specifications") {
  try {
    parse_gate_spec("CP(");
    FAIL("no error raised");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK_THAT(e.what(), ContainsSubstring("column 4"));
  }
  KCF_CHECK_THROWS_KIND(parse_gate_spec("FOO"), ErrorKind::ParseError);
  KCF_CHECK_THROWS_KIND(parse_gate_spec("CANONICAL(1,2)"), ErrorKind::ParseError);
  KCF_CHECK_THROWS_KIND(parse_gate_spec("[[1,0],[0,0],[0,0],[1,0]]"), ErrorKind::ParseError);
  KCF_CHECK_THROWS_KIND(parse_gate_spec("[[1,0],[0,0],[0,0],[0,0], [0,0],[1,0],[0,0],[0,0],"
                                        " [0,0],[0,0],[1,0],[0,0], [0,0],[0,0],[0,0],[2,0]]"),
                        ErrorKind::NotUnitary);
}

TEST_CASE("angles and complex numbers") {
  CHECK_THAT(parse_angle("pi/2"), WithinAbs(kPi / 2, 1e-15));
  CHECK_THAT(parse_angle("-(1+2)*0.5"), WithinAbs(-1.5, 1e-15));
  CHECK_THAT(parse_angle("2*pi/8"), WithinAbs(kPi / 4, 1e-15));
  CHECK(parse_complex("1") == cplx(1, 0));
  CHECK(parse_complex("0.5j") == cplx(0, 0.5));
  CHECK(parse_complex("1-2j") == cplx(1, -2));
  CHECK(parse_complex("-0.25+0.75j") == cplx(-0.25, 0.75));
  KCF_CHECK_THROWS_KIND(parse_complex("1+"), ErrorKind::ParseError);
}

TEST_CASE("matrix files") {
  CHECK((read_matrix_file(data_file("cnot.txt")).matrix() - cnot()).frobenius_norm() < 1e-15);
  CHECK((read_matrix_file(data_file("canonical_xx.txt")).matrix() - exp_pp(kPi / 4, pauli::X)).frobenius_norm() < 1e-12);
  KCF_CHECK_THROWS_KIND(read_matrix_file(data_file("not_unitary.txt")), ErrorKind::NotUnitary);
  KCF_CHECK_THROWS_KIND(read_matrix_file(data_file("missing.txt")), ErrorKind::InvalidArgument);
}

TEST_CASE("decompose report round trip") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 20; ++t) {
    const TwoQubitUnitary u(random_unitary4(rng));
    const json rep = json::parse(decompose_report(u, kDefaultTolerance).dump());
    CHECK(rep.at("command") == "decompose");
    const KcDecomposition d = decomposition_from_json(rep);
    CHECK((reconstruct(d).matrix() - u.matrix()).frobenius_norm() < 1e-8);
    CHECK(rep.at("kc_number") == 3);
  }
}

TEST_CASE("command line runs") {
  SECTION("decompose CNOT as JSON") {
    const auto r = run_cli({"decompose", "--gate", "CNOT", "--json"});
    REQUIRE(r.code == kExitOk);
    const json j = json::parse(r.out);
    CHECK(j.at("kc_number") == 1);
    CHECK_THAT(j.at("weyl")[0].get<double>(), WithinAbs(kPi / 4, 1e-9));
    CHECK_THAT(j.at("weyl")[1].get<double>(), WithinAbs(0.0, 1e-9));
  }
  SECTION("decompose identity as text") {
    const auto r = run_cli({"decompose", "--gate", "I"});
    REQUIRE(r.code == kExitOk);
    CHECK_THAT(r.out, ContainsSubstring("LocalUnitary"));
  }
  SECTION("decide SWAP without entangled references") {
    const auto r = run_cli({"decide", "--gate", "SWAP", "--scenario", "none", "--json"});
    REQUIRE(r.code == kExitOk);
    CHECK(json::parse(r.out).at("decision") == true);
  }
  SECTION("matrix file input") {
    const auto r = run_cli({"classify", "--matrix-file", data_file("cnot.txt"), "--json"});
    REQUIRE(r.code == kExitOk);
    CHECK(json::parse(r.out).at("gate_class") == "ControlledUnitary");
  }
  SECTION("synthesize and compose") {
    const auto s = run_cli({"synthesize", "--gate", "CP(1.2)", "--scenario", "both", "--json"});
    REQUIRE(s.code == kExitOk);
    const auto c = run_cli({"compose", "CNOT", "CNOT_BA", "--json"});
    REQUIRE(c.code == kExitOk);
    CHECK(json::parse(c.out).at("kc_uv") == 2);
    const auto f = run_cli({"factor", "--gate", "CNOT", "--json"});
    REQUIRE(f.code == kExitOk);
  }
  SECTION("validation errors") {
    CHECK(run_cli({"decompose", "--gate", "CP("}).code == kExitValidation);
    CHECK(run_cli({"decompose", "--matrix-file", data_file("not_unitary.txt")}).code == kExitValidation);
    CHECK(run_cli({"synthesize", "--gate", "SWAP", "--scenario", "a-only"}).code == kExitValidation);
    CHECK(run_cli({"decide", "--gate", "CNOT", "--scenario", "bogus"}).code == kExitValidation);
  }
  SECTION("verify subset") {
    const auto r = run_cli({"verify", "--samples", "3", "--only", "round-trip,weyl-invariance", "--json"});
    CHECK(r.code == kExitOk);
    const auto l = run_cli({"verify", "--list"});
    CHECK(l.code == kExitOk);
    CHECK_THAT(l.out, ContainsSubstring("a-marginal-after-u"));
  }
}
