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

#ifndef MCD_BSTAR_HPP_
#define MCD_BSTAR_HPP_

#include <cstddef>
#include <vector>

#include "mcd/gf.hpp"
#include "mcd/linalg.hpp"

namespace mcd {

struct BStarResult {
  /// Zero-based indices into partition_A's b vectors. For s = 3 these are
  /// the column labels of the matrix B_u1.
  std::vector<std::size_t> indices;
  int n_star = 0;
  /// True when the search reached the upper bound or ran to completion;
  /// false when it stopped on its node budget.
  bool provably_maximal = false;
};

/// Largest set of b vectors with every u1-subset independent, found by
/// depth-first search over b indices in ascending order. The first
/// maximum-size set in lexicographic order is returned. The search is
/// exhaustive when n_B <= 20 and budgeted otherwise.
BStarResult find_bstar(const Field& f, int u1);

/// The u1 x 2^(u1-1) matrix of b prefixes for s = 3. Column j has entries
/// 1 + the binary digits of j, most significant digit in row 1.
/// Throws Error{kUnsupportedField} for s != 3.
GFMatrix build_B(const Field& f, int u1);

/// Upper bound on n*: exact for u1 <= 2 or s = 2, otherwise
/// u1+1 when s <= u1, s+u1-2 when s > u1 >= 3 with s odd, else s+u1-1.
int max_nstar_bound(int s, int u1);

}  // namespace mcd

#endif  // MCD_BSTAR_HPP_
