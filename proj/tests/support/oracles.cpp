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

#include "oracles.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mcd::testing {
namespace {

struct FieldConstant {
  int s;
  int p;
  std::vector<int> modulus;
};

// Monic irreducible polynomials, constant term first.
const std::vector<FieldConstant>& constants() {
  static const std::vector<FieldConstant> table = {
      {4, 2, {1, 1, 1}},          {8, 2, {1, 1, 0, 1}},       {16, 2, {1, 1, 0, 0, 1}},
      {32, 2, {1, 0, 1, 0, 0, 1}}, {9, 3, {2, 2, 1}},          {27, 3, {1, 2, 0, 1}},
      {25, 5, {2, 4, 1}},
  };
  return table;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool subsets_balanced(const IntMatrix& data, std::span<const int> levels,
                      std::vector<std::size_t>& chosen, std::size_t next, int t) {
  if (static_cast<int>(chosen.size()) == t) {
    std::int64_t cells = 1;
    for (std::size_t c : chosen) cells *= levels[c];
    if (static_cast<std::int64_t>(data.rows()) % cells != 0) return false;
    std::map<std::vector<int>, std::int64_t> counts;
    for (std::size_t r = 0; r < data.rows(); ++r) {
      std::vector<int> key;
      for (std::size_t c : chosen) {
        const int x = data(r, c);
        if (x < 0 || x >= levels[c]) return false;
        key.push_back(x);
      }
      ++counts[key];
    }
    if (static_cast<std::int64_t>(counts.size()) != cells) return false;
    const std::int64_t want = static_cast<std::int64_t>(data.rows()) / cells;
    for (const auto& [key, n] : counts)
      if (n != want) return false;
    return true;
  }
  for (std::size_t c = next; c < data.cols(); ++c) {
    chosen.push_back(c);
    const bool ok = subsets_balanced(data, levels, chosen, c + 1, t);
    chosen.pop_back();
    if (!ok) return false;
  }
  return true;
}

}  // namespace

PolyField::PolyField(int s) : s_(s) {
  if (is_prime(s)) {
    p_ = s;
    t_ = 1;
    modulus_ = {0, 1};
    return;
  }
  for (const auto& c : constants())
    if (c.s == s) {
      p_ = c.p;
      modulus_ = c.modulus;
      t_ = static_cast<int>(c.modulus.size()) - 1;
      return;
    }
  throw std::invalid_argument("no oracle polynomial for s = " + std::to_string(s));
}

std::vector<int> PolyField::digits(int a) const {
  std::vector<int> d(static_cast<std::size_t>(t_));
  for (int i = 0; i < t_; ++i) {
    d[static_cast<std::size_t>(i)] = a % p_;
    a /= p_;
  }
  return d;
}

int PolyField::index(const std::vector<int>& d) const {
  int a = 0;
  for (int i = t_ - 1; i >= 0; --i) a = a * p_ + d[static_cast<std::size_t>(i)];
  return a;
}

int PolyField::add(int a, int b) const {
  std::vector<int> x = digits(a);
  const std::vector<int> y = digits(b);
  for (int i = 0; i < t_; ++i) x[i] = (x[i] + y[i]) % p_;
  return index(x);
}

int PolyField::neg(int a) const {
  std::vector<int> x = digits(a);
  for (int& c : x) c = (p_ - c) % p_;
  return index(x);
}

int PolyField::mul(int a, int b) const {
  const std::vector<int> x = digits(a);
  const std::vector<int> y = digits(b);
  std::vector<int> prod(static_cast<std::size_t>(2 * t_), 0);
  for (int i = 0; i < t_; ++i)
    for (int j = 0; j < t_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
  // Reduce from the top using x^t = -(m_0 + ... + m_{t-1} x^{t-1}).
  for (int deg = 2 * t_ - 1; deg >= t_; --deg) {
    const int c = prod[deg];
    if (c == 0) continue;
    prod[deg] = 0;
    for (int i = 0; i < t_; ++i) {
      const int k = deg - t_ + i;
      prod[k] = ((prod[k] - c * modulus_[i]) % p_ + p_) % p_;
    }
  }
  prod.resize(static_cast<std::size_t>(t_));
  return index(prod);
}

bool naive_is_oa(const IntMatrix& data, std::span<const int> levels, int t) {
  if (t > static_cast<int>(data.cols())) return false;
  std::vector<std::size_t> chosen;
  return subsets_balanced(data, levels, chosen, 0, t);
}

bool naive_is_lhd(const IntMatrix& d2) {
  const int n = static_cast<int>(d2.rows());
  for (std::size_t c = 0; c < d2.cols(); ++c) {
    std::set<int> seen;
    for (std::size_t r = 0; r < d2.rows(); ++r) {
      const int x = d2(r, c);
      if (x < 0 || x >= n || !seen.insert(x).second) return false;
    }
  }
  return true;
}

bool definitional_mcd(const IntMatrix& d1, const IntMatrix& d2, int s) {
  const int n = static_cast<int>(d1.rows());
  if (d2.rows() != d1.rows() || n % s != 0) return false;
  const std::vector<int> levels(d1.cols(), s);
  const int t = std::min<int>(2, static_cast<int>(d1.cols()));
  if (!naive_is_oa(d1, levels, t) || !naive_is_lhd(d2)) return false;
  const int intervals = n / s;
  for (std::size_t i = 0; i < d1.cols(); ++i)
    for (int level = 0; level < s; ++level)
      for (std::size_t j = 0; j < d2.cols(); ++j) {
        std::vector<int> hits(static_cast<std::size_t>(intervals), 0);
        for (std::size_t r = 0; r < d1.rows(); ++r)
          if (d1(r, i) == level) ++hits[static_cast<std::size_t>(d2(r, j) / s)];
        for (int h : hits)
          if (h != 1) return false;
      }
  return true;
}

bool naive_grid_balanced(const IntMatrix& data, int levels, std::span<const std::size_t> dims,
                         std::span<const int> cells) {
  std::map<std::vector<int>, int> counts;
  for (std::size_t r = 0; r < data.rows(); ++r) {
    std::vector<int> key;
    for (std::size_t i = 0; i < dims.size(); ++i)
      key.push_back(data(r, dims[i]) * cells[i] / levels);
    ++counts[key];
  }
  int total = 1;
  for (int c : cells) total *= c;
  if (static_cast<int>(counts.size()) != total) return false;
  for (const auto& [key, n] : counts)
    if (n * total != static_cast<int>(data.rows())) return false;
  return true;
}

std::vector<std::vector<int>> read_fixture(const std::string& name) {
  const std::string path = std::string(MCD_FIXTURE_DIR) + "/" + name;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("missing fixture " + path);
  std::vector<std::vector<int>> records;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::vector<int> rec;
    int x = 0;
    while (ss >> x) rec.push_back(x);
    if (!rec.empty()) records.push_back(std::move(rec));
  }
  return records;
}

}  // namespace mcd::testing
