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

#ifndef MCD_DESIGN_HPP_
#define MCD_DESIGN_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "mcd/int_matrix.hpp"
#include "mcd/seed.hpp"

namespace mcd {

/// n x m integer array; column j takes levels 0..levels[j]-1. Balance is not
/// enforced on construction, use check_oa_strength to certify it.
class OrthogonalArray {
 public:
  /// Throws Error{kDimensionMismatch} or Error{kLevelOutOfRange}.
  OrthogonalArray(IntMatrix data, std::vector<int> levels,
                  std::optional<int> certified_strength = std::nullopt);
  static OrthogonalArray uniform(IntMatrix data, int s,
                                 std::optional<int> certified_strength = std::nullopt);

  std::size_t runs() const { return data_.rows(); }
  std::size_t factors() const { return data_.cols(); }
  const std::vector<int>& levels() const { return levels_; }
  const IntMatrix& data() const { return data_; }
  std::optional<int> certified_strength() const { return strength_; }

 private:
  IntMatrix data_;
  std::vector<int> levels_;
  std::optional<int> strength_;
};

/// n x k matrix whose columns are permutations of 0..n-1.
class LatinHypercube {
 public:
  /// Throws Error{kNotLatinHypercube} naming the first offending column.
  explicit LatinHypercube(IntMatrix data);

  std::size_t runs() const { return data_.rows(); }
  std::size_t factors() const { return data_.cols(); }
  const IntMatrix& data() const { return data_; }

 private:
  IntMatrix data_;
};

/// The n/s-level array obtained by floor(d / s); each level appears exactly
/// s times per column.
class CollapsedDesign {
 public:
  /// Throws Error{kNotDivisible} or Error{kMalformedCollapsedDesign}.
  CollapsedDesign(IntMatrix data, int s);

  int block() const { return s_; }
  int levels() const { return static_cast<int>(data_.rows()) / s_; }
  std::size_t runs() const { return data_.rows(); }
  std::size_t factors() const { return data_.cols(); }
  const IntMatrix& data() const { return data_; }

  friend bool operator==(const CollapsedDesign&, const CollapsedDesign&) = default;

 private:
  IntMatrix data_;
  int s_;
};

/// Base-s positional encoding of each row of a0: row i maps to
/// sum_j a0(i, j) * s^(w - 1 - j) with w = a0.cols(). Ordinary integer
/// arithmetic on element indices. Throws Error{kLevelOutOfRange}.
std::vector<int> method_of_replacement(const IntMatrix& a0, int s);

/// Entrywise floor(d / s). Throws Error{kNotDivisible} unless s divides n.
CollapsedDesign collapse_levels(const LatinHypercube& d2, int s);

/// Level-replacement expansion: in each column the s rows holding level v
/// receive a permutation of {vs, ..., (v+1)s - 1}, in row order for the
/// identity seed and shuffled by mcd-shuffle-v1 otherwise.
LatinHypercube expand_levels(const CollapsedDesign& t, Seed seed);

/// True iff a bijection of levels maps c1 onto c2 entrywise, i.e. the row
/// partitions induced by the two columns coincide.
/// Throws Error{kLengthMismatch}.
bool is_cascading_pair(std::span<const int> c1, std::span<const int> c2);

}  // namespace mcd

#endif  // MCD_DESIGN_HPP_
