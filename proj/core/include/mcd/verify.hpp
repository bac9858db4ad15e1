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

#ifndef MCD_VERIFY_HPP_
#define MCD_VERIFY_HPP_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mcd/design.hpp"
#include "mcd/int_matrix.hpp"

namespace mcd {

struct CheckResult {
  std::string name;
  /// Columns the check concerns; for a failure this is the first violating
  /// subset in lexicographic order.
  std::vector<std::size_t> columns;
  bool passed = true;
  std::string counterexample;
};

class VerificationReport {
 public:
  bool passed() const { return passed_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  const CheckResult* first_failure() const;

  void add(CheckResult check);
  void merge(const VerificationReport& other);

 private:
  bool passed_ = true;
  std::vector<CheckResult> checks_;
};

/// Every t-column projection must hold each level combination exactly
/// n / (s_j1 * ... * s_jt) times. Throws Error{kStrengthExceedsColumns}.
VerificationReport check_oa_strength(const OrthogonalArray& a, int t);
VerificationReport check_oa_strength(const IntMatrix& data, std::span<const int> levels, int t);

/// Coupling criterion: D1 is an s-level array of strength min(2, m), D2 is a
/// Latin hypercube and for every column d_j of floor(D2 / s) and every column
/// a_i of D1 the pair (a_i, d_j) is balanced. Throws Error{kRunCountMismatch}
/// or Error{kNotDivisible}.
VerificationReport check_mcd(const OrthogonalArray& d1, const LatinHypercube& d2, int s);
/// Same criterion on unvalidated matrices, as loaded from a file. Level range
/// and permutation failures are reported as failed checks.
VerificationReport check_mcd(const IntMatrix& d1, const IntMatrix& d2, int s);

/// Fails on the first pair of columns related by a level permutation.
VerificationReport check_noncascading(const CollapsedDesign& t);
VerificationReport check_noncascading(const IntMatrix& collapsed);

/// Maps value d of each selected column to cell floor(d * cells / levels) and
/// requires every cell combination n / prod(cells) times. `levels` is n for a
/// Latin hypercube and n/s for a collapsed design. Throws Error{kBadGrid}.
VerificationReport check_grid_stratification(const LatinHypercube& d2,
                                             std::span<const std::size_t> dims,
                                             std::span<const int> cells);
VerificationReport check_grid_stratification(const IntMatrix& data, int levels,
                                             std::span<const std::size_t> dims,
                                             std::span<const int> cells);
/// Runs the grid check on every |cells|-subset of columns, reporting a single
/// aggregated result with the first failing subset.
VerificationReport check_all_projections(const IntMatrix& data, int levels,
                                         std::span<const int> cells);

}  // namespace mcd

#endif  // MCD_VERIFY_HPP_
