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

#ifndef MCD_INT_MATRIX_HPP_
#define MCD_INT_MATRIX_HPP_

#include <cstddef>
#include <span>
#include <vector>

namespace mcd {

/// Dense row-major integer matrix. Designs, arrays and level columns are all
/// stored this way; entries are plain level indices.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, int fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Throws Error{kDimensionMismatch} when the rows are ragged.
  static IntMatrix from_rows(const std::vector<std::vector<int>>& rows);
  /// Throws Error{kDimensionMismatch} when the columns differ in length.
  static IntMatrix from_columns(const std::vector<std::vector<int>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  std::span<const int> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::vector<int> column(std::size_t c) const;
  std::vector<std::vector<int>> to_rows() const;
  /// Horizontal concatenation; row counts must agree.
  static IntMatrix hconcat(const IntMatrix& left, const IntMatrix& right);
  IntMatrix select_columns(std::span<const std::size_t> cols) const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<int> data_;
};

}  // namespace mcd

#endif  // MCD_INT_MATRIX_HPP_
