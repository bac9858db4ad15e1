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

#ifndef MCD_COMBINATIONS_HPP_
#define MCD_COMBINATIONS_HPP_

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

namespace mcd {

/// Visits every k-subset of {0, ..., n-1} in lexicographic order. The visitor
/// receives the sorted indices and returns false to stop early. Returns true
/// when the enumeration ran to completion.
template <typename Visitor>
bool for_each_combination(std::size_t n, std::size_t k, Visitor&& visit) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (!visit(std::span<const std::size_t>(idx))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace mcd

#endif  // MCD_COMBINATIONS_HPP_
