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

#include "mcd/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>

#include "mcd/combinations.hpp"
#include "mcd/error.hpp"

namespace mcd {
namespace {

std::string tuple_string(std::span<const int> values) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << ')';
  return os.str();
}

std::string columns_string(std::span<const std::size_t> cols) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
  os << '}';
  return os.str();
}

// Level of column `col` at row `r` once mapped through `cell_of`.
using CellFn = int (*)(int value, int levels, int cells);

int identity_cell(int value, int, int) { return value; }
int grid_cell(int value, int levels, int cells) {
  if (value < 0 || value >= levels) return -1;
  return static_cast<int>(static_cast<std::int64_t>(value) * cells / levels);
}

// Counts the level combinations of `radix`-valued columns and returns a
// description of the lexicographically first combination whose count is not
// `n / prod(radix)`, or nullopt when balanced.
std::optional<std::string> first_imbalance(const IntMatrix& data,
                                           std::span<const std::size_t> cols,
                                           std::span<const int> radix,
                                           std::span<const int> source_levels, CellFn cell) {
  const std::size_t n = data.rows();
  std::int64_t product = 1;
  for (int r : radix) {
    product *= r;
    if (product > static_cast<std::int64_t>(n)) break;
  }
  std::vector<int> combo(cols.size());
  if (product > static_cast<std::int64_t>(n) || n % static_cast<std::size_t>(product) != 0) {
    std::ostringstream os;
    os << "runs " << n << " not divisible by " << product << " level combinations";
    return os.str();
  }
  const std::int64_t expected = static_cast<std::int64_t>(n) / product;

  std::vector<std::int64_t> counts(static_cast<std::size_t>(product), 0);
  for (std::size_t r = 0; r < n; ++r) {
    std::int64_t key = 0;
    for (std::size_t i = 0; i < cols.size(); ++i) {
      const int value = data(r, cols[i]);
      const int level = cell(value, source_levels[i], radix[i]);
      if (level < 0 || level >= radix[i]) {
        std::ostringstream os;
        os << "row " << r << " column " << cols[i] << " has out-of-range value " << value;
        return os.str();
      }
      key = key * radix[i] + level;
    }
    ++counts[static_cast<std::size_t>(key)];
  }
  for (std::int64_t key = 0; key < product; ++key) {
    if (counts[static_cast<std::size_t>(key)] == expected) continue;
    std::int64_t rest = key;
    for (std::size_t i = cols.size(); i-- > 0;) {
      combo[i] = static_cast<int>(rest % radix[i]);
      rest /= radix[i];
    }
    std::ostringstream os;
    os << "levels " << tuple_string(combo) << " appear " << counts[static_cast<std::size_t>(key)]
       << " times, expected " << expected;
    return os.str();
  }
  return std::nullopt;
}

CheckResult strength_check(const IntMatrix& data, std::span<const int> levels, int t,
                           const std::string& name) {
  CheckResult result{name, {}, true, {}};
  std::vector<int> radix(static_cast<std::size_t>(t));
  for_each_combination(data.cols(), static_cast<std::size_t>(t),
                       [&](std::span<const std::size_t> cols) {
                         for (std::size_t i = 0; i < cols.size(); ++i) radix[i] = levels[cols[i]];
                         auto bad = first_imbalance(data, cols, radix, radix, identity_cell);
                         if (!bad) return true;
                         result.passed = false;
                         result.columns.assign(cols.begin(), cols.end());
                         result.counterexample = "columns " + columns_string(cols) + ": " + *bad;
                         return false;
                       });
  return result;
}

CheckResult levels_check(const IntMatrix& data, int s, const std::string& name) {
  CheckResult result{name, {}, true, {}};
  for (std::size_t c = 0; c < data.cols() && result.passed; ++c) {
    for (std::size_t r = 0; r < data.rows(); ++r) {
      if (data(r, c) >= 0 && data(r, c) < s) continue;
      result.passed = false;
      result.columns = {c};
      result.counterexample = "row " + std::to_string(r) + " column " + std::to_string(c) +
                              " has level " + std::to_string(data(r, c)) + " outside 0.." +
                              std::to_string(s - 1);
      break;
    }
  }
  return result;
}

CheckResult permutation_check(const IntMatrix& d2, std::size_t c) {
  CheckResult result{"lhd_permutation", {c}, true, {}};
  const std::size_t n = d2.rows();
  std::vector<int> seen_at(n, -1);
  for (std::size_t r = 0; r < n; ++r) {
    const int v = d2(r, c);
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      result.passed = false;
      result.counterexample = "column x" + std::to_string(c + 1) + " row " + std::to_string(r) +
                              " has level " + std::to_string(v) + " outside 0.." +
                              std::to_string(n - 1);
      return result;
    }
    if (seen_at[v] >= 0) {
      result.passed = false;
      result.counterexample = "column x" + std::to_string(c + 1) + " repeats level " +
                              std::to_string(v) + " at rows " + std::to_string(seen_at[v]) +
                              " and " + std::to_string(r);
      return result;
    }
    seen_at[v] = static_cast<int>(r);
  }
  return result;
}

void validate_grid(std::size_t n, std::size_t ncols, int levels, std::span<const std::size_t> dims,
                   std::span<const int> cells) {
  if (dims.size() != cells.size() || dims.empty())
    throw Error(Errc::kBadGrid, "grid needs one positive cell count per selected column");
  std::int64_t product = 1;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] >= ncols)
      throw Error(Errc::kBadGrid, "column " + std::to_string(dims[i]) + " out of range");
    if (cells[i] < 1 || levels % cells[i] != 0)
      throw Error(Errc::kBadGrid, std::to_string(cells[i]) + " cells do not divide " +
                                      std::to_string(levels) + " levels");
    product *= cells[i];
  }
  if (static_cast<std::int64_t>(n) % product != 0)
    throw Error(Errc::kBadGrid, "grid of " + std::to_string(product) + " cells does not divide " +
                                    std::to_string(n) + " runs");
}

}  // namespace

const CheckResult* VerificationReport::first_failure() const {
  auto it = std::find_if(checks_.begin(), checks_.end(),
                         [](const CheckResult& c) { return !c.passed; });
  return it == checks_.end() ? nullptr : &*it;
}

void VerificationReport::add(CheckResult check) {
  passed_ = passed_ && check.passed;
  checks_.push_back(std::move(check));
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& c : other.checks()) add(c);
}

VerificationReport check_oa_strength(const OrthogonalArray& a, int t) {
  return check_oa_strength(a.data(), a.levels(), t);
}

VerificationReport check_oa_strength(const IntMatrix& data, std::span<const int> levels, int t) {
  if (t < 0 || static_cast<std::size_t>(t) > data.cols())
    throw Error(Errc::kStrengthExceedsColumns, "strength " + std::to_string(t) + " with only " +
                                                   std::to_string(data.cols()) + " columns");
  if (levels.size() != data.cols())
    throw Error(Errc::kDimensionMismatch, "one level count per column is required");
  VerificationReport report;
  report.add(strength_check(data, levels, t, "oa_strength_" + std::to_string(t)));
  return report;
}

VerificationReport check_mcd(const OrthogonalArray& d1, const LatinHypercube& d2, int s) {
  return check_mcd(d1.data(), d2.data(), s);
}

VerificationReport check_mcd(const IntMatrix& d1, const IntMatrix& d2, int s) {
  const std::size_t n = d1.rows();
  if (d2.rows() != n)
    throw Error(Errc::kRunCountMismatch, "D1 has " + std::to_string(n) + " runs, D2 has " +
                                             std::to_string(d2.rows()));
  if (s < 2 || n % static_cast<std::size_t>(s) != 0)
    throw Error(Errc::kNotDivisible,
                std::to_string(s) + " does not divide run count " + std::to_string(n));

  VerificationReport report;
  const CheckResult levels = levels_check(d1, s, "d1_levels");
  report.add(levels);
  if (levels.passed) {
    const std::vector<int> d1_levels(d1.cols(), s);
    const int t = static_cast<int>(std::min<std::size_t>(2, d1.cols()));
    report.add(strength_check(d1, d1_levels, t, "d1_oa_strength_" + std::to_string(t)));
  }

  const int slices = static_cast<int>(n) / s;
  for (std::size_t j = 0; j < d2.cols(); ++j) report.add(permutation_check(d2, j));
  if (!levels.passed) return report;

  IntMatrix pair(n, 2);
  const std::size_t pair_cols[] = {0, 1};
  const int radix[] = {s, slices};
  for (std::size_t j = 0; j < d2.cols(); ++j) {
    CheckResult coupling{"coupling", {j}, true, {}};
    for (std::size_t i = 0; i < d1.cols() && coupling.passed; ++i) {
      for (std::size_t r = 0; r < n; ++r) {
        pair(r, 0) = d1(r, i);
        const int v = d2(r, j);
        pair(r, 1) = (v < 0 || v >= static_cast<int>(n)) ? -1 : v / s;
      }
      auto bad = first_imbalance(pair, pair_cols, radix, radix, identity_cell);
      if (!bad) continue;
      coupling.passed = false;
      coupling.counterexample = "(q" + std::to_string(i + 1) + ", floor(x" + std::to_string(j + 1) +
                                "/" + std::to_string(s) + ")) " + *bad;
    }
    report.add(std::move(coupling));
  }
  return report;
}

VerificationReport check_noncascading(const CollapsedDesign& t) {
  return check_noncascading(t.data());
}

VerificationReport check_noncascading(const IntMatrix& collapsed) {
  CheckResult result{"noncascading", {}, true, {}};
  std::vector<std::vector<int>> cols(collapsed.cols());
  for (std::size_t c = 0; c < collapsed.cols(); ++c) cols[c] = collapsed.column(c);
  for_each_combination(cols.size(), 2, [&](std::span<const std::size_t> pair) {
    if (!is_cascading_pair(cols[pair[0]], cols[pair[1]])) return true;
    result.passed = false;
    result.columns.assign(pair.begin(), pair.end());
    result.counterexample = "columns " + std::to_string(pair[0]) + " and " +
                            std::to_string(pair[1]) + " differ only by a level permutation";
    return false;
  });
  VerificationReport report;
  report.add(std::move(result));
  return report;
}

VerificationReport check_grid_stratification(const LatinHypercube& d2,
                                             std::span<const std::size_t> dims,
                                             std::span<const int> cells) {
  return check_grid_stratification(d2.data(), static_cast<int>(d2.runs()), dims, cells);
}

VerificationReport check_grid_stratification(const IntMatrix& data, int levels,
                                             std::span<const std::size_t> dims,
                                             std::span<const int> cells) {
  validate_grid(data.rows(), data.cols(), levels, dims, cells);
  std::vector<int> source(dims.size(), levels);
  CheckResult result{"stratification", {dims.begin(), dims.end()}, true, {}};
  if (auto bad = first_imbalance(data, dims, cells, source, grid_cell)) {
    result.passed = false;
    result.counterexample = "columns " + columns_string(dims) + ": cells " + *bad;
  }
  VerificationReport report;
  report.add(std::move(result));
  return report;
}

VerificationReport check_all_projections(const IntMatrix& data, int levels,
                                         std::span<const int> cells) {
  std::ostringstream name;
  name << "stratification_";
  for (std::size_t i = 0; i < cells.size(); ++i) name << (i ? "x" : "") << cells[i];
  CheckResult result{name.str(), {}, true, {}};
  if (cells.size() <= data.cols()) {
    std::vector<std::size_t> first(cells.size());
    for (std::size_t i = 0; i < first.size(); ++i) first[i] = i;
    validate_grid(data.rows(), data.cols(), levels, first, cells);
  }
  std::vector<int> source(cells.size(), levels);
  for_each_combination(data.cols(), cells.size(), [&](std::span<const std::size_t> dims) {
    auto bad = first_imbalance(data, dims, cells, source, grid_cell);
    if (!bad) return true;
    result.passed = false;
    result.columns.assign(dims.begin(), dims.end());
    result.counterexample = "columns " + columns_string(dims) + ": cells " + *bad;
    return false;
  });
  VerificationReport report;
  report.add(std::move(result));
  return report;
}

}  // namespace mcd
