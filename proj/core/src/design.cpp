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

#include "mcd/design.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>
#include <utility>

#include "mcd/error.hpp"

namespace mcd {

OrthogonalArray::OrthogonalArray(IntMatrix data, std::vector<int> levels,
                                 std::optional<int> certified_strength)
    : data_(std::move(data)), levels_(std::move(levels)), strength_(certified_strength) {
  if (levels_.size() != data_.cols())
    throw Error(Errc::kDimensionMismatch, std::to_string(levels_.size()) +
                                              " level counts for " +
                                              std::to_string(data_.cols()) + " columns");
  for (std::size_t c = 0; c < data_.cols(); ++c) {
    if (levels_[c] < 1)
      throw Error(Errc::kLevelOutOfRange, "column " + std::to_string(c) + " has no levels");
    for (std::size_t r = 0; r < data_.rows(); ++r) {
      const int v = data_(r, c);
      if (v < 0 || v >= levels_[c])
        throw Error(Errc::kLevelOutOfRange, "entry (" + std::to_string(r) + ", " +
                                                std::to_string(c) + ") = " + std::to_string(v) +
                                                " outside 0.." + std::to_string(levels_[c] - 1));
    }
  }
}

OrthogonalArray OrthogonalArray::uniform(IntMatrix data, int s,
                                         std::optional<int> certified_strength) {
  std::vector<int> levels(data.cols(), s);
  return OrthogonalArray(std::move(data), std::move(levels), certified_strength);
}

LatinHypercube::LatinHypercube(IntMatrix data) : data_(std::move(data)) {
  const std::size_t n = data_.rows();
  std::vector<char> seen(n);
  for (std::size_t c = 0; c < data_.cols(); ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      const int v = data_(r, c);
      if (v < 0 || static_cast<std::size_t>(v) >= n || seen[v])
        throw Error(Errc::kNotLatinHypercube,
                    "column " + std::to_string(c) + " is not a permutation of 0.." +
                        std::to_string(n - 1) + " (row " + std::to_string(r) + ")");
      seen[v] = 1;
    }
  }
}

CollapsedDesign::CollapsedDesign(IntMatrix data, int s) : data_(std::move(data)), s_(s) {
  const std::size_t n = data_.rows();
  if (s < 1 || n % static_cast<std::size_t>(s) != 0)
    throw Error(Errc::kNotDivisible,
                std::to_string(s) + " does not divide run count " + std::to_string(n));
  const std::size_t levels = n / static_cast<std::size_t>(s);
  std::vector<int> count(levels);
  for (std::size_t c = 0; c < data_.cols(); ++c) {
    std::fill(count.begin(), count.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      const int v = data_(r, c);
      if (v < 0 || static_cast<std::size_t>(v) >= levels)
        throw Error(Errc::kMalformedCollapsedDesign,
                    "column " + std::to_string(c) + " has level " + std::to_string(v) +
                        " outside 0.." + std::to_string(levels - 1));
      ++count[v];
    }
    for (std::size_t v = 0; v < levels; ++v)
      if (count[v] != s)
        throw Error(Errc::kMalformedCollapsedDesign,
                    "column " + std::to_string(c) + " has level " + std::to_string(v) + " " +
                        std::to_string(count[v]) + " times, expected " + std::to_string(s));
  }
}

std::vector<int> method_of_replacement(const IntMatrix& a0, int s) {
  std::vector<int> out(a0.rows(), 0);
  for (std::size_t r = 0; r < a0.rows(); ++r) {
    int acc = 0;
    for (std::size_t c = 0; c < a0.cols(); ++c) {
      const int v = a0(r, c);
      if (v < 0 || v >= s)
        throw Error(Errc::kLevelOutOfRange, "entry (" + std::to_string(r) + ", " +
                                                std::to_string(c) + ") = " + std::to_string(v) +
                                                " is not an " + std::to_string(s) + "-level value");
      acc = acc * s + v;
    }
    out[r] = acc;
  }
  return out;
}

CollapsedDesign collapse_levels(const LatinHypercube& d2, int s) {
  const IntMatrix& d = d2.data();
  if (s < 1 || d.rows() % static_cast<std::size_t>(s) != 0)
    throw Error(Errc::kNotDivisible,
                std::to_string(s) + " does not divide run count " + std::to_string(d.rows()));
  IntMatrix out(d.rows(), d.cols());
  for (std::size_t r = 0; r < d.rows(); ++r)
    for (std::size_t c = 0; c < d.cols(); ++c) out(r, c) = d(r, c) / s;
  return CollapsedDesign(std::move(out), s);
}

LatinHypercube expand_levels(const CollapsedDesign& t, Seed seed) {
  const IntMatrix& collapsed = t.data();
  const int s = t.block();
  const std::size_t levels = static_cast<std::size_t>(t.levels());
  IntMatrix out(collapsed.rows(), collapsed.cols());

  std::vector<std::vector<std::size_t>> rows_at(levels);
  std::vector<int> block(static_cast<std::size_t>(s));
  for (std::size_t c = 0; c < collapsed.cols(); ++c) {
    for (auto& rows : rows_at) rows.clear();
    for (std::size_t r = 0; r < collapsed.rows(); ++r)
      rows_at[static_cast<std::size_t>(collapsed(r, c))].push_back(r);

    auto engine = column_engine(seed.raw(), c);
    for (std::size_t v = 0; v < levels; ++v) {
      for (int i = 0; i < s; ++i) block[i] = static_cast<int>(v) * s + i;
      if (!seed.is_identity()) {
        for (std::size_t i = block.size() - 1; i > 0; --i) {
          const auto j = static_cast<std::size_t>(uniform_below(engine, i + 1));
          std::swap(block[i], block[j]);
        }
      }
      for (int i = 0; i < s; ++i) out(rows_at[v][i], c) = block[i];
    }
  }
  return LatinHypercube(std::move(out));
}

bool is_cascading_pair(std::span<const int> c1, std::span<const int> c2) {
  if (c1.size() != c2.size())
    throw Error(Errc::kLengthMismatch, "columns of length " + std::to_string(c1.size()) +
                                           " and " + std::to_string(c2.size()));
  std::unordered_map<int, int> forward;
  std::unordered_map<int, int> backward;
  for (std::size_t r = 0; r < c1.size(); ++r) {
    const auto [fit, fnew] = forward.try_emplace(c1[r], c2[r]);
    if (!fnew && fit->second != c2[r]) return false;
    const auto [bit, bnew] = backward.try_emplace(c2[r], c1[r]);
    if (!bnew && bit->second != c1[r]) return false;
  }
  return true;
}

}  // namespace mcd
