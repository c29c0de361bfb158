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

#include "kcforge/error.hpp"

namespace kcforge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::NotProductForm: return "NotProductForm";
    case ErrorKind::NumericalDegeneracy: return "NumericalDegeneracy";
    case ErrorKind::DegenerateCount: return "DegenerateCount";
    case ErrorKind::InvalidBasis: return "InvalidBasis";
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InconsistentCriteria: return "InconsistentCriteria";
    case ErrorKind::RankDetectionAmbiguous: return "RankDetectionAmbiguous";
    case ErrorKind::NotInvertibleInScenario: return "NotInvertibleInScenario";
    case ErrorKind::SearchFailure: return "SearchFailure";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

bool is_validation_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotSymmetric:
    case ErrorKind::NotUnitary:
    case ErrorKind::NotProductForm:
    case ErrorKind::InvalidBasis:
    case ErrorKind::InvalidState:
    case ErrorKind::InvalidArgument:
    case ErrorKind::NotInvertibleInScenario:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::ParseError:
      return true;
    default:
      return false;
  }
}

}  // namespace kcforge
