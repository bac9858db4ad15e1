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

#include "mcd/seed.hpp"

#include <charconv>

namespace mcd {

std::optional<Seed> Seed::parse(std::string_view text) {
  if (text == "identity") return Seed::identity();
  if (text.empty()) return std::nullopt;
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size()) return std::nullopt;
  return Seed::value(v);
}

std::string Seed::to_string() const {
  return is_identity() ? std::string("identity") : std::to_string(*value_);
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::mt19937_64 column_engine(std::uint64_t seed, std::uint64_t column) {
  return std::mt19937_64(splitmix64(seed ^ splitmix64(column + 1)));
}

std::uint64_t uniform_below(std::mt19937_64& engine, std::uint64_t bound) {
  // Values below `threshold` would bias the modulo; 2^64 mod bound of them.
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = engine();
    if (r >= threshold) return r % bound;
  }
}

}  // namespace mcd
