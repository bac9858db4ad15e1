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

#include "mcd/subspace.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "mcd/error.hpp"
#include "mcd/linalg.hpp"

namespace mcd {
namespace {

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t v = 1;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return v;
}

}  // namespace

std::int64_t admissible_count(int s, int u, int u1) {
  return ipow(s - 1, u1 - 1) * ipow(s, u - u1);
}

VectorSetA build_A(const Field& f, int u, int u1) {
  if (u < 1 || u1 < 1 || u1 > u)
    throw Error(Errc::kBadParams, "need 1 <= u1 <= u, got u=" + std::to_string(u) +
                                      " u1=" + std::to_string(u1));
  VectorSetA a{f.order(), u, u1, {}};
  for (auto& x : enumerate_tuples(f, u)) {
    if (x[0] != f.one()) continue;
    bool admissible = true;
    for (int i = 1; i < u1 && admissible; ++i) admissible = !x[i].is_zero();
    if (admissible) a.vectors.push_back(std::move(x));
  }
  return a;
}

PartitionedA partition_A(const VectorSetA& a) {
  PartitionedA p{a.s, a.u, a.u1, {}, {}};
  for (const auto& x : a.vectors) {
    GFVector b(static_cast<std::size_t>(a.u));
    for (int i = 0; i < a.u1; ++i) b[i] = x[i];
    if (p.b_vectors.empty() || p.b_vectors.back() != b) {
      p.b_vectors.push_back(b);
      p.groups.emplace_back();
    }
    p.groups.back().push_back(x);
  }
  return p;
}

std::vector<GFVector> enumerate_E(const Field& f, int u, int u1) {
  std::vector<GFVector> out;
  for (const auto& lambda : enumerate_tuples(f, u1)) {
    GFVector z(static_cast<std::size_t>(u));
    for (int i = 0; i < u1; ++i) z[i] = lambda[i];
    out.push_back(std::move(z));
  }
  return out;
}

EBarSet build_Ebar(const Field& f, const PartitionedA& p, std::size_t i) {
  if (i >= p.n_b())
    throw Error(Errc::kBadParams, "b index " + std::to_string(i) + " out of range (n_B=" +
                                      std::to_string(p.n_b()) + ")");
  EBarSet out{i, {}};
  for (auto& z : enumerate_E(f, p.u, p.u1))
    if (!dot(f, z, p.b_vectors[i]).is_zero()) out.vectors.push_back(std::move(z));
  return out;
}

EBarIntersection intersect_Ebar(const Field& f, const PartitionedA& p,
                                std::span<const std::size_t> indices) {
  if (indices.empty()) throw Error(Errc::kBadParams, "at least one b index is required");
  std::set<std::size_t> distinct(indices.begin(), indices.end());
  if (distinct.size() != indices.size())
    throw Error(Errc::kBadParams, "b indices must be distinct");
  std::vector<GFVector> chosen;
  for (std::size_t i : indices) {
    if (i >= p.n_b())
      throw Error(Errc::kBadParams, "b index " + std::to_string(i) + " out of range (n_B=" +
                                        std::to_string(p.n_b()) + ")");
    chosen.push_back(p.b_vectors[i]);
  }

  EBarIntersection out;
  for (auto& z : enumerate_E(f, p.u, p.u1)) {
    const bool in_all = std::all_of(chosen.begin(), chosen.end(), [&](const GFVector& b) {
      return !dot(f, z, b).is_zero();
    });
    if (!in_all) continue;
    if (normalized(f, z) == z) out.e_star.push_back(z);
    out.vectors.push_back(std::move(z));
  }
  out.f_v = static_cast<std::int64_t>(out.vectors.size());
  out.g_v = static_cast<std::int64_t>(out.e_star.size());
  out.hypothesis_holds = every_subset_independent(f, chosen, static_cast<std::size_t>(p.u1));
  out.formula_f = ebar_intersection_formula(p.s, p.u1, static_cast<int>(indices.size()));
  out.formula_matches = out.formula_f == out.f_v;
  return out;
}

std::int64_t ebar_intersection_formula(int s, int u1, int v) {
  if (v <= u1) return ipow(s - 1, v) * ipow(s, u1 - v);
  std::int64_t total = 0;
  for (int i = 0; i <= u1; ++i) total += (i % 2 ? -1 : 1) * binomial(v, i) * ipow(s, u1 - i);
  for (int i = u1 + 1; i <= v; ++i) total += (i % 2 ? -1 : 1) * binomial(v, i);
  return total;
}

}  // namespace mcd
