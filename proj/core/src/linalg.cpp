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

#include "mcd/linalg.hpp"

#include <algorithm>
#include <utility>

#include "mcd/combinations.hpp"
#include "mcd/error.hpp"

namespace mcd {

std::int64_t capped_power(int s, int u) {
  std::int64_t value = 1;
  for (int i = 0; i < u; ++i) {
    value *= s;
    if (value > kEnumerationCap) return -1;
  }
  return value;
}

GFMatrix GFMatrix::from_columns(const std::vector<GFVector>& cols) {
  const std::size_t rows = cols.empty() ? 0 : cols.front().size();
  GFMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows)
      throw Error(Errc::kDimensionMismatch, "generator column " + std::to_string(c) +
                                                " has length " + std::to_string(cols[c].size()));
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

GFMatrix GFMatrix::identity(std::size_t n) {
  GFMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = GFElement(1);
  return m;
}

GFVector GFMatrix::column(std::size_t c) const {
  GFVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<GFVector> GFMatrix::columns() const {
  std::vector<GFVector> out;
  out.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out.push_back(column(c));
  return out;
}

std::vector<GFVector> enumerate_tuples(const Field& f, int u) {
  if (u < 0) throw Error(Errc::kBadParams, "negative tuple length");
  const std::int64_t count = capped_power(f.order(), u);
  if (count < 0)
    throw Error(Errc::kTooLarge, std::to_string(f.order()) + "^" + std::to_string(u) +
                                     " tuples exceed the enumeration cap");
  std::vector<GFVector> out;
  out.reserve(static_cast<std::size_t>(count));
  GFVector current(static_cast<std::size_t>(u));
  for (std::int64_t r = 0; r < count; ++r) {
    out.push_back(current);
    for (int i = u - 1; i >= 0; --i) {
      const int next = current[i].index() + 1;
      if (next < f.order()) {
        current[i] = GFElement(next);
        break;
      }
      current[i] = GFElement(0);
    }
  }
  return out;
}

int rank(const Field& f, GFMatrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && m(sel, c).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(sel, k), m(pivot_row, k));
    const GFElement inv = f.inv(m(pivot_row, c));
    for (std::size_t k = 0; k < cols; ++k) m(pivot_row, k) = f.mul(inv, m(pivot_row, k));
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m(r, c).is_zero()) continue;
      const GFElement factor = m(r, c);
      for (std::size_t k = 0; k < cols; ++k)
        m(r, k) = f.sub(m(r, k), f.mul(factor, m(pivot_row, k)));
    }
    ++pivot_row;
  }
  return static_cast<int>(pivot_row);
}

int rank(const Field& f, const std::vector<GFVector>& columns) {
  if (columns.empty()) return 0;
  return rank(f, GFMatrix::from_columns(columns));
}

SubspaceBasis orthogonal_complement_basis(const Field& f, const GFVector& x) {
  if (x.is_zero()) throw Error(Errc::kZeroVector, "O(x) requires a nonzero x");
  const std::size_t u = x.size();
  std::size_t pivot = 0;
  while (x[pivot].is_zero()) ++pivot;
  const GFElement pivot_inv = f.inv(x[pivot]);

  SubspaceBasis basis;
  basis.ambient_dim = u;
  for (std::size_t j = 0; j < u; ++j) {
    if (j == pivot) continue;
    GFVector y(u);
    y[j] = f.one();
    y[pivot] = f.neg(f.mul(x[j], pivot_inv));
    basis.vectors.push_back(std::move(y));
  }
  return basis;
}

std::vector<GFVector> enumerate_span(const Field& f, const SubspaceBasis& basis) {
  const auto coefficients = enumerate_tuples(f, static_cast<int>(basis.dimension()));
  std::vector<GFVector> out;
  out.reserve(coefficients.size());
  for (const auto& lambda : coefficients) {
    GFVector v(basis.ambient_dim);
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      if (lambda[i].is_zero()) continue;
      v = add(f, v, scale(f, lambda[i], basis.vectors[i]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

IntMatrix generate_linear_array(const Field& f, const GFMatrix& gen) {
  const int u = static_cast<int>(gen.rows());
  const std::size_t m = gen.cols();
  const std::int64_t n = capped_power(f.order(), u);
  if (n < 0) throw Error(Errc::kTooLarge, "generated array would exceed the enumeration cap");

  IntMatrix out(static_cast<std::size_t>(n), m);
  std::vector<int> lambda(static_cast<std::size_t>(u), 0);
  for (std::int64_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      GFElement acc = f.zero();
      for (int i = 0; i < u; ++i) {
        if (lambda[i] == 0) continue;
        acc = f.add(acc, f.mul(GFElement(lambda[i]), gen(i, c)));
      }
      out(static_cast<std::size_t>(r), c) = acc.index();
    }
    for (int i = u - 1; i >= 0; --i) {
      if (++lambda[i] < f.order()) break;
      lambda[i] = 0;
    }
  }
  return out;
}

std::vector<GFVector> complete_basis(const Field& f, std::vector<GFVector> seed,
                                     const std::vector<GFVector>& pool, std::size_t target) {
  int current = rank(f, seed);
  for (const auto& v : pool) {
    if (seed.size() >= target) break;
    seed.push_back(v);
    const int next = rank(f, seed);
    if (next > current) {
      current = next;
    } else {
      seed.pop_back();
    }
  }
  return seed;
}

bool every_subset_independent(const Field& f, const std::vector<GFVector>& vectors,
                              std::size_t k) {
  const std::size_t size = std::min(k, vectors.size());
  std::vector<GFVector> subset(size);
  return for_each_combination(vectors.size(), size, [&](std::span<const std::size_t> idx) {
    for (std::size_t i = 0; i < idx.size(); ++i) subset[i] = vectors[idx[i]];
    return rank(f, subset) == static_cast<int>(size);
  });
}

int linear_strength(const Field& f, const std::vector<GFVector>& columns, int max_t) {
  int strength = 0;
  const int limit = std::min<int>(max_t, static_cast<int>(columns.size()));
  for (int t = 1; t <= limit; ++t) {
    if (!every_subset_independent(f, columns, static_cast<std::size_t>(t))) break;
    strength = t;
  }
  return strength;
}

}  // namespace mcd
