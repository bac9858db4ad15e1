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

#ifndef MCD_GF_HPP_
#define MCD_GF_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace mcd {

/// An element of GF(s) identified by its position in the field's element
/// table. Index 0 is the additive identity and index 1 the multiplicative
/// identity for every field.
class GFElement {
 public:
  constexpr GFElement() = default;
  constexpr explicit GFElement(int index)
      : index_(static_cast<std::uint8_t>(index)) {}

  constexpr int index() const { return index_; }
  constexpr bool is_zero() const { return index_ == 0; }

  friend constexpr auto operator<=>(GFElement, GFElement) = default;

 private:
  std::uint8_t index_ = 0;
};

/// Finite field GF(s), s = p^t, 2 <= s <= 32.
///
/// Elements of an extension field are polynomial residues modulo a fixed
/// irreducible polynomial. A residue c_0 + c_1 x + ... + c_{t-1} x^{t-1} is
/// stored at index c_0 + c_1 p + ... + c_{t-1} p^{t-1}, so the constant term
/// is the least significant digit. For prime s this reduces to the integers
/// mod s.
///
/// The built-in reduction polynomials (coefficients listed from the constant
/// term upwards) are:
///
///   s=4  x^2+x+1        s=8  x^3+x+1      s=16 x^4+x+1     s=32 x^5+x^2+1
///   s=9  x^2+2x+2       s=25 x^2+4x+2     s=27 x^3+2x+1
///
/// A Field is immutable once created and may be shared freely.
class Field {
 public:
  static constexpr int kMaxOrder = 32;

  /// Throws Error{kNotPrimePower} for s < 2 or s with two distinct prime
  /// factors, Error{kUnsupported} for s > 32.
  static Field create(int s);

  int order() const { return s_; }
  int characteristic() const { return p_; }
  int degree() const { return t_; }
  /// Monic, degree t, constant term first. Empty for prime fields.
  const std::vector<int>& reduction_polynomial() const { return poly_; }
  /// Coefficients over GF(p) of the element, constant term first.
  std::vector<int> coefficients(GFElement a) const;

  bool valid(GFElement a) const { return a.index() < s_; }
  GFElement element(int index) const;
  GFElement zero() const { return GFElement(0); }
  GFElement one() const { return GFElement(1); }

  GFElement add(GFElement a, GFElement b) const {
    return GFElement(add_[a.index() * s_ + b.index()]);
  }
  GFElement sub(GFElement a, GFElement b) const { return add(a, neg(b)); }
  GFElement neg(GFElement a) const { return GFElement(neg_[a.index()]); }
  GFElement mul(GFElement a, GFElement b) const {
    return GFElement(mul_[a.index() * s_ + b.index()]);
  }
  /// Throws Error{kZeroInverse} for a = 0.
  GFElement inv(GFElement a) const;
  GFElement div(GFElement a, GFElement b) const { return mul(a, inv(b)); }

  std::vector<GFElement> elements() const;

  friend bool operator==(const Field& a, const Field& b) { return a.s_ == b.s_; }

 private:
  Field() = default;

  int s_ = 0;
  int p_ = 0;
  int t_ = 0;
  std::vector<int> poly_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> neg_;
  std::vector<std::uint8_t> inv_;
};

/// Returns (p, t) with s = p^t, or (0, 0) if s is not a prime power >= 2.
std::pair<int, int> prime_power_decomposition(int s);

/// Column vector of S_u, the length-u vectors over GF(s).
class GFVector {
 public:
  GFVector() = default;
  explicit GFVector(std::size_t u) : entries_(u) {}
  explicit GFVector(std::vector<GFElement> entries)
      : entries_(std::move(entries)) {}

  /// Builds a vector from element indices, the form used in files and tests.
  static GFVector of(std::initializer_list<int> indices);
  static GFVector of(std::span<const int> indices);
  /// e_i (zero-based i) of length u.
  static GFVector unit(std::size_t u, std::size_t i);

  std::size_t size() const { return entries_.size(); }
  GFElement operator[](std::size_t i) const { return entries_[i]; }
  GFElement& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool is_zero() const;
  std::vector<int> indices() const;
  std::string to_string() const;

  friend auto operator<=>(const GFVector&, const GFVector&) = default;

 private:
  std::vector<GFElement> entries_;
};

std::ostream& operator<<(std::ostream& os, const GFVector& v);

/// x^T y over the field. Throws Error{kLengthMismatch}.
GFElement dot(const Field& f, const GFVector& x, const GFVector& y);
GFVector add(const Field& f, const GFVector& x, const GFVector& y);
GFVector scale(const Field& f, GFElement alpha, const GFVector& x);
/// Scales x so its first nonzero entry is 1. Zero stays zero.
GFVector normalized(const Field& f, const GFVector& x);
/// True when x = alpha * y for some alpha in GF(s) or y = alpha * x.
bool proportional(const Field& f, const GFVector& x, const GFVector& y);

}  // namespace mcd

#endif  // MCD_GF_HPP_
