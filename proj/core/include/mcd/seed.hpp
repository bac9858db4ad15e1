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

#ifndef MCD_SEED_HPP_
#define MCD_SEED_HPP_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>

namespace mcd {

/// Seed for level-replacement expansion. The "identity" pseudo-seed assigns
/// levels in row order; a numeric seed drives the mcd-shuffle-v1 generator.
///
/// mcd-shuffle-v1: column j of a design is shuffled by a std::mt19937_64
/// seeded with splitmix64(seed ^ splitmix64(j + 1)). Each level block is
/// permuted by a Fisher-Yates pass running from the last slot down, whose
/// bounded draws use rejection sampling on the raw 64-bit output. The engine
/// and the draw are both fully specified, so a seed produces identical
/// designs on every platform.
class Seed {
 public:
  static Seed identity() { return Seed(); }
  static Seed value(std::uint64_t v) { return Seed(v); }
  /// Accepts "identity" or a decimal unsigned integer.
  static std::optional<Seed> parse(std::string_view text);

  bool is_identity() const { return !value_.has_value(); }
  std::uint64_t raw() const { return value_.value_or(0); }
  std::string to_string() const;

  friend bool operator==(const Seed&, const Seed&) = default;

 private:
  Seed() = default;
  explicit Seed(std::uint64_t v) : value_(v) {}

  std::optional<std::uint64_t> value_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Per-column engine for mcd-shuffle-v1.
std::mt19937_64 column_engine(std::uint64_t seed, std::uint64_t column);

/// Uniform draw from [0, bound) by rejection; bound must be positive.
std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound);

}  // namespace mcd

#endif  // MCD_SEED_HPP_
