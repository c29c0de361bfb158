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

// Textual gate specifications.
//
//   spec    := name | name '(' expr {',' expr} ')' | json-matrix
//   name    := I | CNOT | CNOT_BA | CZ | SWAP | ISWAP | CP | CANONICAL
//   expr    := arithmetic over numbers and `pi` with + - * / and parentheses
//
// A json-matrix is 16 [re, im] pairs in row-major order, either flat or as
// four rows of four. Names are case-insensitive.

#include <string>
#include <string_view>

#include "kcforge/kak.hpp"

namespace kcforge::cli {

/// Throws Error(ParseError) with a 1-based column in the message, or
/// Error(NotUnitary) for explicit matrices that are not unitary.
TwoQubitUnitary parse_gate_spec(std::string_view text,
                                double eps = kDefaultTolerance);

/// Evaluates an angle expression such as "pi/4" or "-0.5*pi + 1e-3".
double parse_angle(std::string_view text);

/// One complex literal: "1", "-0.5j", "0.7+0.7j", "(1e-3-2j)".
cplx parse_complex(std::string_view text);

/// Four lines of four whitespace-separated complex literals.
TwoQubitUnitary read_matrix_file(const std::string& path,
                                 double eps = kDefaultTolerance);

}  // namespace kcforge::cli
