// Copyright 2026 The mcd-forge Authors
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

#include "mcd/error.hpp"

namespace mcd {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::kNotPrimePower: return "NotPrimePower";
    case Errc::kUnsupported: return "Unsupported";
    case Errc::kZeroInverse: return "ZeroInverse";
    case Errc::kTooLarge: return "TooLarge";
    case Errc::kZeroVector: return "ZeroVector";
    case Errc::kDimensionMismatch: return "DimensionMismatch";
    case Errc::kLevelOutOfRange: return "LevelOutOfRange";
    case Errc::kNotDivisible: return "NotDivisible";
    case Errc::kNotLatinHypercube: return "NotLatinHypercube";
    case Errc::kMalformedCollapsedDesign: return "MalformedCollapsedDesign";
    case Errc::kLengthMismatch: return "LengthMismatch";
    case Errc::kStrengthExceedsColumns: return "StrengthExceedsColumns";
    case Errc::kRunCountMismatch: return "RunCountMismatch";
    case Errc::kBadGrid: return "BadGrid";
    case Errc::kBadParams: return "BadParams";
    case Errc::kUnsupportedField: return "UnsupportedField";
    case Errc::kOrthogonalityViolation: return "OrthogonalityViolation";
    case Errc::kProportionalVectors: return "ProportionalVectors";
    case Errc::kVOutOfRange: return "VOutOfRange";
    case Errc::kTooManyColumns: return "TooManyColumns";
    case Errc::kNotApplicable: return "NotApplicable";
    case Errc::kVerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

}  // namespace mcd
