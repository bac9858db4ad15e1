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

#ifndef MCD_CATALOG_HPP_
#define MCD_CATALOG_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcd/construct.hpp"
#include "mcd/seed.hpp"
#include "mcd/verify.hpp"

namespace mcd {

struct OAParams {
  std::int64_t n = 0;
  std::int64_t m = 0;
  int s = 0;
  int strength = 0;

  friend bool operator==(const OAParams&, const OAParams&) = default;
};

struct LHDParams {
  std::int64_t n = 0;
  std::int64_t k = 0;

  friend bool operator==(const LHDParams&, const LHDParams&) = default;
};

/// One constructible design: a (u, u1, item) cell of the theorem1 table or
/// a (u, u1, v, item) cell of the theorem2 table.
struct CatalogRow {
  int s = 0;
  int u = 0;
  int u1 = 0;
  Method method = Method::kTheorem1;
  std::optional<int> v;
  Item item = Item::kI;
  OAParams d1;
  LHDParams d2;
  bool is_max_v = false;      ///< v = n*
  int u_bar_1 = 0;            ///< u - u1
  std::int64_t n_a = 0;       ///< theorem1: size of the admissible set
  std::int64_t g = 0;         ///< theorem2: g(v)

  friend bool operator==(const CatalogRow&, const CatalogRow&) = default;
};

/// Rows for u_min <= u <= u_max, every u1 in 1..u, items i then ii.
/// Throws Error{kBadParams} unless s <= 5 is a prime power and
/// 2 <= u_min <= u_max <= 6 (u_min may be 1).
std::vector<CatalogRow> enumerate_theorem1(int s, int u_max, int u_min = 2);
std::vector<CatalogRow> enumerate_theorem2(int s, int u_max, int u_min = 2);

struct NStarEntry {
  int v = 0;
  std::int64_t g = 0;
  std::string d1_item_i;
  std::string d2_item_i;
  std::string d1_item_ii;
  std::string d2_item_ii;
};

/// n* for the cases with a closed form (s = 2, or u1 <= 2) with one entry
/// per v and design templates in terms of u. Elsewhere n_star is the upper
/// bound, exact is false and entries is empty.
struct NStarSummary {
  int s = 0;
  int u1 = 0;
  int n_star = 0;
  bool exact = false;
  std::vector<NStarEntry> entries;
};

NStarSummary nstar_summary(int s, int u1);

ConstructionParams row_params(const CatalogRow& row, Seed seed);
MarginallyCoupledDesign materialize(const CatalogRow& row, Seed seed);

/// check_mcd, check_noncascading, the advertised D1 strength (capped at the
/// column count) and the advertised dimensions.
VerificationReport verify_row(const CatalogRow& row, const MarginallyCoupledDesign& design);

}  // namespace mcd

#endif  // MCD_CATALOG_HPP_
