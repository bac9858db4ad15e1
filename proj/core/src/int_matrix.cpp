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

#include "mcd/int_matrix.hpp"

#include "mcd/error.hpp"

namespace mcd {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols)
      throw Error(Errc::kDimensionMismatch, "row " + std::to_string(r) + " has " +
                                                std::to_string(rows[r].size()) +
                                                " entries, expected " + std::to_string(cols));
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<int>>& cols) {
  const std::size_t rows = cols.empty() ? 0 : cols.front().size();
  IntMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw Error(Errc::kDimensionMismatch, "column " + std::to_string(c) + " has " +
                                                std::to_string(cols[c].size()) +
                                                " entries, expected " + std::to_string(rows));
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

std::vector<int> IntMatrix::column(std::size_t c) const {
  std::vector<int> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

std::vector<std::vector<int>> IntMatrix::to_rows() const {
  std::vector<std::vector<int>> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r].assign(row(r).begin(), row(r).end());
  return out;
}

IntMatrix IntMatrix::hconcat(const IntMatrix& left, const IntMatrix& right) {
  if (left.rows() != right.rows())
    throw Error(Errc::kDimensionMismatch, "hconcat of matrices with different row counts");
  IntMatrix m(left.rows(), left.cols() + right.cols());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    for (std::size_t c = 0; c < left.cols(); ++c) m(r, c) = left(r, c);
    for (std::size_t c = 0; c < right.cols(); ++c) m(r, left.cols() + c) = right(r, c);
  }
  return m;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> cols) const {
  IntMatrix m(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = (*this)(r, cols[c]);
  return m;
}

}  // namespace mcd
