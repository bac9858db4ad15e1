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

#ifndef MCD_LINALG_HPP_
#define MCD_LINALG_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mcd/gf.hpp"
#include "mcd/int_matrix.hpp"

namespace mcd {

/// Largest vector set any enumeration routine will materialize.
inline constexpr std::int64_t kEnumerationCap = 10'000'000;

/// s^u, or -1 when it exceeds kEnumerationCap.
std::int64_t capped_power(int s, int u);

/// Dense matrix over GF(s), row-major.
class GFMatrix {
 public:
  GFMatrix() = default;
  GFMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  /// Throws Error{kDimensionMismatch} on ragged input.
  static GFMatrix from_columns(const std::vector<GFVector>& cols);
  static GFMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  GFElement operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  GFElement& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  GFVector column(std::size_t c) const;
  std::vector<GFVector> columns() const;

  friend bool operator==(const GFMatrix&, const GFMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GFElement> data_;
};

/// Linearly independent vectors of a common ambient space S_u.
struct SubspaceBasis {
  std::size_t ambient_dim = 0;
  std::vector<GFVector> vectors;

  std::size_t dimension() const { return vectors.size(); }
};

/// All s^u vectors of S_u. Position r holds the base-s digits of r with the
/// first coordinate most significant, so the last coordinate varies fastest.
/// Throws Error{kTooLarge} when s^u > kEnumerationCap.
std::vector<GFVector> enumerate_tuples(const Field& f, int u);

/// Rank by Gaussian elimination.
int rank(const Field& f, GFMatrix m);
int rank(const Field& f, const std::vector<GFVector>& columns);

/// Reduced-echelon basis of O(x) = {y : y^T x = 0}. With p the first nonzero
/// coordinate of x, the basis holds one vector per coordinate j != p, in
/// ascending j, with a 1 at j, -x_j / x_p at p and zeros elsewhere.
/// Throws Error{kZeroVector} for x = 0.
SubspaceBasis orthogonal_complement_basis(const Field& f, const GFVector& x);

/// Every vector of span(basis), listed in enumerate_tuples order of the
/// coefficient tuples. Throws Error{kTooLarge}.
std::vector<GFVector> enumerate_span(const Field& f, const SubspaceBasis& basis);

/// The s^u x m array whose row r is lambda_r^T * gen, lambda_r being
/// position r of enumerate_tuples(f, u) and u = gen.rows().
IntMatrix generate_linear_array(const Field& f, const GFMatrix& gen);

/// Appends vectors from `pool` (in order) to `seed` whenever they raise the
/// rank, stopping once `target` vectors are held.
std::vector<GFVector> complete_basis(const Field& f, std::vector<GFVector> seed,
                                     const std::vector<GFVector>& pool, std::size_t target);

/// True when every min(k, |vectors|)-subset of `vectors` is independent.
bool every_subset_independent(const Field& f, const std::vector<GFVector>& vectors,
                              std::size_t k);

/// Strength of the linear array generated by `columns`: the largest t with
/// every t-subset independent, capped at min(|columns|, max_t).
int linear_strength(const Field& f, const std::vector<GFVector>& columns, int max_t);

}  // namespace mcd

#endif  // MCD_LINALG_HPP_
