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

#include "mcd/gf.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "mcd/error.hpp"

namespace mcd {
namespace {

struct ReductionPolynomial {
  int s;
  std::vector<int> coefficients;  // constant term first, monic
};

// These happen to be the Conway polynomials for each order.
const std::vector<ReductionPolynomial>& builtin_polynomials() {
  static const std::vector<ReductionPolynomial> kTable = {
      {4, {1, 1, 1}},          {8, {1, 1, 0, 1}},     {16, {1, 1, 0, 0, 1}},
      {32, {1, 0, 1, 0, 0, 1}}, {9, {2, 2, 1}},       {25, {2, 4, 1}},
      {27, {1, 2, 0, 1}},
  };
  return kTable;
}

std::vector<int> to_digits(int index, int p, int t) {
  std::vector<int> digits(t);
  for (int i = 0; i < t; ++i) {
    digits[i] = index % p;
    index /= p;
  }
  return digits;
}

int from_digits(const std::vector<int>& digits, int p) {
  int index = 0;
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) index = index * p + *it;
  return index;
}

// Schoolbook product of two residues followed by reduction modulo poly.
std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<int>& poly, int p) {
  const int t = static_cast<int>(a.size());
  std::vector<int> prod(2 * t - 1, 0);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (int deg = 2 * t - 2; deg >= t; --deg) {
    const int c = prod[deg];
    if (c == 0) continue;
    // x^t = -(poly_0 + ... + poly_{t-1} x^{t-1})
    for (int k = 0; k < t; ++k)
      prod[deg - t + k] = ((prod[deg - t + k] - c * poly[k]) % p + p) % p;
    prod[deg] = 0;
  }
  prod.resize(t);
  return prod;
}

}  // namespace

std::pair<int, int> prime_power_decomposition(int s) {
  if (s < 2) return {0, 0};
  int p = 0;
  for (int d = 2; d * d <= s; ++d) {
    if (s % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) return {s, 1};
  int t = 0;
  int rest = s;
  while (rest % p == 0) {
    rest /= p;
    ++t;
  }
  if (rest != 1) return {0, 0};
  return {p, t};
}

Field Field::create(int s) {
  const auto [p, t] = prime_power_decomposition(s);
  if (p == 0)
    throw Error(Errc::kNotPrimePower, "order " + std::to_string(s) + " is not a prime power");
  if (s > kMaxOrder)
    throw Error(Errc::kUnsupported,
                "order " + std::to_string(s) + " exceeds the supported maximum of 32");

  Field f;
  f.s_ = s;
  f.p_ = p;
  f.t_ = t;
  if (t > 1) {
    const auto& table = builtin_polynomials();
    auto it = std::find_if(table.begin(), table.end(),
                           [s](const ReductionPolynomial& r) { return r.s == s; });
    f.poly_ = it->coefficients;
  }

  const std::size_t ss = static_cast<std::size_t>(s) * s;
  f.add_.resize(ss);
  f.mul_.resize(ss);
  f.neg_.resize(s);
  f.inv_.assign(s, 0);

  std::vector<std::vector<int>> digits(s);
  for (int i = 0; i < s; ++i) digits[i] = to_digits(i, p, t);

  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < s; ++b) {
      std::vector<int> sum(t);
      for (int k = 0; k < t; ++k) sum[k] = (digits[a][k] + digits[b][k]) % p;
      f.add_[a * s + b] = static_cast<std::uint8_t>(from_digits(sum, p));
      int prod = 0;
      if (t == 1) {
        prod = (a * b) % p;
      } else {
        prod = from_digits(poly_mulmod(digits[a], digits[b], f.poly_, p), p);
      }
      f.mul_[a * s + b] = static_cast<std::uint8_t>(prod);
    }
  }
  for (int a = 0; a < s; ++a) {
    for (int b = 0; b < s; ++b) {
      if (f.add_[a * s + b] == 0) f.neg_[a] = static_cast<std::uint8_t>(b);
      if (f.mul_[a * s + b] == 1) f.inv_[a] = static_cast<std::uint8_t>(b);
    }
  }
  return f;
}

std::vector<int> Field::coefficients(GFElement a) const {
  return to_digits(a.index(), p_, t_);
}

GFElement Field::element(int index) const {
  if (index < 0 || index >= s_)
    throw Error(Errc::kLevelOutOfRange,
                "element index " + std::to_string(index) + " outside GF(" + std::to_string(s_) + ")");
  return GFElement(index);
}

GFElement Field::inv(GFElement a) const {
  if (a.is_zero()) throw Error(Errc::kZeroInverse, "zero has no multiplicative inverse");
  return GFElement(inv_[a.index()]);
}

std::vector<GFElement> Field::elements() const {
  std::vector<GFElement> out;
  out.reserve(s_);
  for (int i = 0; i < s_; ++i) out.emplace_back(i);
  return out;
}

GFVector GFVector::of(std::initializer_list<int> indices) {
  return of(std::span<const int>(indices.begin(), indices.size()));
}

GFVector GFVector::of(std::span<const int> indices) {
  GFVector v(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 0 || indices[i] >= Field::kMaxOrder)
      throw Error(Errc::kLevelOutOfRange, "element index " + std::to_string(indices[i]));
    v.entries_[i] = GFElement(indices[i]);
  }
  return v;
}

GFVector GFVector::unit(std::size_t u, std::size_t i) {
  GFVector v(u);
  v.entries_.at(i) = GFElement(1);
  return v;
}

bool GFVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](GFElement e) { return e.is_zero(); });
}

std::vector<int> GFVector::indices() const {
  std::vector<int> out(entries_.size());
  std::transform(entries_.begin(), entries_.end(), out.begin(),
                 [](GFElement e) { return e.index(); });
  return out;
}

std::string GFVector::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GFVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].index();
  }
  return os << ')';
}

GFElement dot(const Field& f, const GFVector& x, const GFVector& y) {
  if (x.size() != y.size())
    throw Error(Errc::kLengthMismatch, "dot product of vectors with different lengths");
  GFElement acc = f.zero();
  for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x[i], y[i]));
  return acc;
}

GFVector add(const Field& f, const GFVector& x, const GFVector& y) {
  if (x.size() != y.size())
    throw Error(Errc::kLengthMismatch, "sum of vectors with different lengths");
  GFVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.add(x[i], y[i]);
  return out;
}

GFVector scale(const Field& f, GFElement alpha, const GFVector& x) {
  GFVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.mul(alpha, x[i]);
  return out;
}

GFVector normalized(const Field& f, const GFVector& x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) return scale(f, f.inv(x[i]), x);
  return x;
}

bool proportional(const Field& f, const GFVector& x, const GFVector& y) {
  if (x.size() != y.size()) return false;
  if (x.is_zero() || y.is_zero()) return true;
  return normalized(f, x) == normalized(f, y);
}

}  // namespace mcd
