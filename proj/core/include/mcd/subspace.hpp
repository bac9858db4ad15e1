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

#ifndef MCD_SUBSPACE_HPP_
#define MCD_SUBSPACE_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mcd/gf.hpp"

namespace mcd {

/// The admissible set: vectors of S_u with first entry 1, entries 2..u1
/// nonzero and entries u1+1..u free. Equivalently, the vectors with leading
/// entry 1 that lie outside every O(e_i), i <= u1.
struct VectorSetA {
  int s = 0;
  int u = 0;
  int u1 = 0;
  std::vector<GFVector> vectors;  // base-s order

  std::size_t size() const { return vectors.size(); }
};

/// (s-1)^(u1-1) * s^(u-u1).
std::int64_t admissible_count(int s, int u, int u1);

/// Throws Error{kBadParams} unless 1 <= u1 <= u.
VectorSetA build_A(const Field& f, int u, int u1);

/// Vectors of the admissible set grouped by their first u1 entries. Group i
/// holds the vectors sharing the prefix of b_i = (1, b_i2, ..., b_iu1, 0, ..., 0).
struct PartitionedA {
  int s = 0;
  int u = 0;
  int u1 = 0;
  std::vector<GFVector> b_vectors;
  std::vector<std::vector<GFVector>> groups;

  std::size_t n_b() const { return b_vectors.size(); }
};

PartitionedA partition_A(const VectorSetA& a);

/// E = span{e_1, ..., e_u1} embedded in S_u, coefficient tuples in base-s
/// order (lambda_1 most significant).
std::vector<GFVector> enumerate_E(const Field& f, int u, int u1);

/// Members z of E with z^T b_i != 0 (zero-based i).
struct EBarSet {
  std::size_t b_index = 0;
  std::vector<GFVector> vectors;
};

EBarSet build_Ebar(const Field& f, const PartitionedA& p, std::size_t i);

struct EBarIntersection {
  std::vector<GFVector> vectors;    ///< the exact intersection, E order
  std::int64_t f_v = 0;             ///< |vectors|
  std::vector<GFVector> e_star;     ///< members whose first nonzero entry is 1
  std::int64_t g_v = 0;             ///< |e_star|
  bool hypothesis_holds = false;    ///< every u1 of the chosen b's independent
  std::int64_t formula_f = 0;       ///< closed-form count for v = |indices|
  /// True when the count matches the closed form; only asserted as a property
  /// when hypothesis_holds.
  bool formula_matches = false;
};

/// Intersection of the Ebar sets for the given zero-based b indices.
EBarIntersection intersect_Ebar(const Field& f, const PartitionedA& p,
                                std::span<const std::size_t> indices);

/// Closed-form size of a v-fold intersection when every u1 of the b's are
/// independent: (s-1)^v s^(u1-v) for v <= u1, otherwise
/// sum_{i<=u1} (-1)^i C(v,i) s^(u1-i) + sum_{u1<i<=v} (-1)^i C(v,i).
std::int64_t ebar_intersection_formula(int s, int u1, int v);

}  // namespace mcd

#endif  // MCD_SUBSPACE_HPP_
