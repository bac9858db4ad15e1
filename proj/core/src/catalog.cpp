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

#include "mcd/catalog.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "mcd/bstar.hpp"
#include "mcd/error.hpp"
#include "mcd/gf.hpp"
#include "mcd/subspace.hpp"

namespace mcd {
namespace {

constexpr int kMaxCatalogS = 5;
constexpr int kMaxCatalogU = 6;

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t v = 1;
  for (int i = 0; i < exp; ++i) v *= base;
  return v;
}

void check_range(int s, int u_max, int u_min) {
  const auto [p, t] = prime_power_decomposition(s);
  if (p == 0 || s > kMaxCatalogS)
    throw Error(Errc::kBadParams,
                "catalog s must be a prime power <= 5, got " + std::to_string(s));
  if (u_min < 1 || u_min > u_max || u_max > kMaxCatalogU)
    throw Error(Errc::kBadParams, "catalog needs 1 <= u_min <= u_max <= 6, got u_min=" +
                                      std::to_string(u_min) + " u_max=" + std::to_string(u_max));
}

// Advertised strength of a theorem2 D1.
int subspace_strength(int s, int u1) { return s == 2 && u1 >= 2 ? 3 : 2; }

std::string power(int base, const std::string& exp) {
  return std::to_string(base) + "^" + exp;
}

}  // namespace

std::vector<CatalogRow> enumerate_theorem1(int s, int u_max, int u_min) {
  check_range(s, u_max, u_min);
  std::vector<CatalogRow> rows;
  for (int u = u_min; u <= u_max; ++u) {
    const std::int64_t n = ipow(s, u);
    for (int u1 = 1; u1 <= u; ++u1) {
      const std::int64_t n_a = admissible_count(s, u, u1);
      for (Item item : {Item::kI, Item::kII}) {
        CatalogRow row;
        row.s = s;
        row.u = u;
        row.u1 = u1;
        row.method = Method::kTheorem1;
        row.item = item;
        row.u_bar_1 = u - u1;
        row.n_a = n_a;
        if (item == Item::kI) {
          row.d1 = {n, u1, s, u1};
          row.d2 = {n, n_a};
        } else {
          row.d1 = {n, n_a, s, 2};
          row.d2 = {n, u1};
        }
        rows.push_back(row);
      }
    }
  }
  return rows;
}

std::vector<CatalogRow> enumerate_theorem2(int s, int u_max, int u_min) {
  check_range(s, u_max, u_min);
  const Field f = Field::create(s);

  // g(v) depends only on (s, u1), so compute it once per u1 from B*.
  std::map<int, std::vector<std::int64_t>> g_by_u1;
  for (int u1 = 1; u1 <= u_max; ++u1) {
    const BStarResult bstar = find_bstar(f, u1);
    const PartitionedA part = partition_A(build_A(f, u1, u1));
    std::vector<std::int64_t>& g = g_by_u1[u1];
    for (int v = 1; v <= bstar.n_star; ++v) {
      const std::span<const std::size_t> chosen(bstar.indices.data(),
                                                static_cast<std::size_t>(v));
      g.push_back(intersect_Ebar(f, part, chosen).g_v);
    }
  }

  std::vector<CatalogRow> rows;
  for (int u = u_min; u <= u_max; ++u) {
    const std::int64_t n = ipow(s, u);
    for (int u1 = 1; u1 <= u; ++u1) {
      const std::vector<std::int64_t>& g = g_by_u1.at(u1);
      const int n_star = static_cast<int>(g.size());
      for (int v = 1; v <= n_star; ++v) {
        const std::int64_t k = v * ipow(s, u - u1);
        const std::int64_t gv = g[static_cast<std::size_t>(v - 1)];
        for (Item item : {Item::kI, Item::kII}) {
          CatalogRow row;
          row.s = s;
          row.u = u;
          row.u1 = u1;
          row.method = Method::kTheorem2;
          row.v = v;
          row.item = item;
          row.is_max_v = v == n_star;
          row.u_bar_1 = u - u1;
          row.g = gv;
          const int strength = subspace_strength(s, u1);
          if (item == Item::kI) {
            row.d1 = {n, gv, s, strength};
            row.d2 = {n, k};
          } else {
            row.d1 = {n, k, s, strength};
            row.d2 = {n, gv};
          }
          rows.push_back(row);
        }
      }
    }
  }
  return rows;
}

NStarSummary nstar_summary(int s, int u1) {
  NStarSummary out;
  out.s = s;
  out.u1 = u1;
  const std::string n = power(s, "u");
  auto add = [&](int v, std::int64_t g, const std::string& k) {
    const std::string gs = std::to_string(g);
    const int t = subspace_strength(s, u1);
    const std::string ss = std::to_string(s);
    const std::string ts = std::to_string(t);
    out.entries.push_back({v, g, "OA(" + n + ", " + gs + ", " + ss + ", " + ts + ")",
                           "LHD(" + n + ", " + k + ")",
                           "OA(" + n + ", " + k + ", " + ss + ", " + ts + ")",
                           "LHD(" + n + ", " + gs + ")"});
  };
  if (s == 2 || u1 == 1) {
    out.n_star = 1;
    out.exact = true;
    add(1, s == 2 ? ipow(2, u1 - 1) : 1, power(s, "(u-" + std::to_string(u1) + ")"));
  } else if (u1 == 2) {
    out.n_star = s - 1;
    out.exact = true;
    const std::string block = power(s, "(u-2)");
    for (int v = 1; v <= s - 1; ++v) {
      const std::int64_t g = v == 1 ? s : v == 2 ? s - 1 : s - v + 1;
      add(v, g, v == 1 ? block : std::to_string(v) + "*" + block);
    }
  } else {
    out.n_star = max_nstar_bound(s, u1);
    out.exact = false;
  }
  return out;
}

ConstructionParams row_params(const CatalogRow& row, Seed seed) {
  ConstructionParams p;
  p.method = row.method;
  p.s = row.s;
  p.u = row.u;
  p.u1 = row.u1;
  p.v = row.v;
  p.item = row.item;
  p.seed = seed;
  return p;
}

MarginallyCoupledDesign materialize(const CatalogRow& row, Seed seed) {
  return construct(row_params(row, seed));
}

VerificationReport verify_row(const CatalogRow& row, const MarginallyCoupledDesign& design) {
  VerificationReport report = check_mcd(design.d1, design.d2, row.s);
  report.merge(check_noncascading(design.t_tilde));
  const int m = static_cast<int>(design.d1.factors());
  if (m > 0) report.merge(check_oa_strength(design.d1, std::min(row.d1.strength, m)));

  CheckResult dims;
  dims.name = "advertised_parameters";
  const OAParams got_d1{static_cast<std::int64_t>(design.d1.runs()),
                        static_cast<std::int64_t>(design.d1.factors()), row.s,
                        row.d1.strength};
  const LHDParams got_d2{static_cast<std::int64_t>(design.d2.runs()),
                         static_cast<std::int64_t>(design.d2.factors())};
  if (got_d1 != row.d1 || got_d2 != row.d2) {
    dims.passed = false;
    dims.counterexample = "built OA(" + std::to_string(got_d1.n) + "," +
                          std::to_string(got_d1.m) + ") + LHD(" + std::to_string(got_d2.n) +
                          "," + std::to_string(got_d2.k) + "), advertised OA(" +
                          std::to_string(row.d1.n) + "," + std::to_string(row.d1.m) +
                          ") + LHD(" + std::to_string(row.d2.n) + "," +
                          std::to_string(row.d2.k) + ")";
  }
  report.add(std::move(dims));
  return report;
}

}  // namespace mcd
