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

#include <gtest/gtest.h>

#include <array>
#include <set>
#include <vector>

#include "mcd/bstar.hpp"
#include "mcd/catalog.hpp"
#include "mcd/combinations.hpp"
#include "mcd/construct.hpp"
#include "mcd/error.hpp"
#include "mcd/linalg.hpp"
#include "mcd/subspace.hpp"
#include "mcd/verify.hpp"
#include "oracles.hpp"

namespace mcd {
namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return Errc::kVerificationFailed;
}

ConstructionParams general(int s, std::vector<GFVector> z, std::vector<GFVector> x) {
  ConstructionParams p;
  p.method = Method::kGeneral;
  p.s = s;
  p.u = static_cast<int>(z.front().size());
  p.u1 = 1;
  p.z_list = std::move(z);
  p.x_list = std::move(x);
  return p;
}

ConstructionParams subspace(int s, int u, int u1, int v, Item item) {
  ConstructionParams p;
  p.method = Method::kTheorem2;
  p.s = s;
  p.u = u;
  p.u1 = u1;
  p.v = v;
  p.item = item;
  return p;
}

void expect_valid_mcd(const MarginallyCoupledDesign& d) {
  const int s = d.params.s;
  EXPECT_TRUE(check_mcd(d.d1, d.d2, s).passed());
  EXPECT_TRUE(testing::definitional_mcd(d.d1.data(), d.d2.data(), s));
  EXPECT_TRUE(check_noncascading(d.t_tilde).passed());
  EXPECT_EQ(collapse_levels(d.d2, s), d.t_tilde);
}

TEST(GeneralConstruction, GoldenGF3WithOverride) {
  ConstructionParams p = general(3, {GFVector::of({1, 2, 0})}, {GFVector::of({1, 2, 0})});
  p.generator_overrides[0] = {GFVector::of({0, 0, 1}), GFVector::of({1, 1, 0})};
  const MarginallyCoupledDesign d = general_construction(p);
  const auto arr = testing::read_fixture("gf3_u3_generated_array.txt");
  const auto rep = testing::read_fixture("gf3_u3_replacement.txt");
  ASSERT_EQ(d.d1.runs(), 27u);
  for (std::size_t r = 0; r < 27; ++r) {
    EXPECT_EQ(d.d1.data()(r, 0), arr[r][2]) << r;
    EXPECT_EQ(d.t_tilde.data()(r, 0), rep[r][0]) << r;
    EXPECT_EQ(rep[r][1], arr[r][2]);
  }
  EXPECT_EQ(d.provenance.generators[0], p.generator_overrides[0]);
  expect_valid_mcd(d);
}

TEST(GeneralConstruction, InputValidation) {
  const GFVector z = GFVector::of({0, 1});
  const GFVector x = GFVector::of({1, 0});
  try {
    general_construction(general(2, {z}, {x}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kOrthogonalityViolation);
    EXPECT_NE(std::string(e.what()).find("z1=(0,1) lies in O(x1), x1=(1,0)"), std::string::npos);
  }
  EXPECT_EQ(code_of([] {
              general_construction(general(3, {GFVector::of({0, 0})}, {GFVector::of({1, 1})}));
            }),
            Errc::kZeroVector);
  EXPECT_EQ(code_of([] {
              general_construction(general(3, {GFVector::of({1, 1}), GFVector::of({2, 2})},
                                           {GFVector::of({1, 0})}));
            }),
            Errc::kProportionalVectors);
  EXPECT_EQ(code_of([] {
              general_construction(general(3, {GFVector::of({1, 1})}, {GFVector::of({1, 0, 0})}));
            }),
            Errc::kDimensionMismatch);
}

TEST(GeneralConstruction, OverrideMustLieInComplement) {
  ConstructionParams p = general(3, {GFVector::of({1, 2, 0})}, {GFVector::of({1, 2, 0})});
  p.generator_overrides[0] = {GFVector::of({0, 0, 1}), GFVector::of({1, 0, 0})};
  EXPECT_EQ(code_of([&] { general_construction(p); }), Errc::kBadParams);
  p.generator_overrides[0] = {GFVector::of({0, 0, 1}), GFVector::of({0, 0, 2})};
  EXPECT_EQ(code_of([&] { general_construction(p); }), Errc::kBadParams);
  p.generator_overrides.clear();
  p.generator_overrides[3] = {GFVector::of({0, 0, 1}), GFVector::of({1, 1, 0})};
  EXPECT_EQ(code_of([&] { general_construction(p); }), Errc::kBadParams);
}

TEST(Theorem1, AllSmallParameters) {
  for (int s : {2, 3, 4, 5}) {
    for (int u = 2; u <= 3; ++u)
      for (int u1 = 1; u1 <= u; ++u1)
        for (Item item : {Item::kI, Item::kII}) {
          ConstructionParams p;
          p.method = Method::kTheorem1;
          p.s = s;
          p.u = u;
          p.u1 = u1;
          p.item = item;
          p.seed = Seed::value(static_cast<std::uint64_t>(s * 100 + u * 10 + u1));
          const MarginallyCoupledDesign d = theorem1(p);
          const std::int64_t na = admissible_count(s, u, u1);
          const auto m = static_cast<std::int64_t>(d.d1.factors());
          const auto k = static_cast<std::int64_t>(d.d2.factors());
          EXPECT_EQ(m, item == Item::kI ? u1 : na);
          EXPECT_EQ(k, item == Item::kI ? na : u1);
          expect_valid_mcd(d);
          if (item == Item::kI) EXPECT_TRUE(check_oa_strength(d.d1, u1).passed());
        }
  }
}

TEST(Theorem1, RejectsBadU1) {
  ConstructionParams p;
  p.method = Method::kTheorem1;
  p.s = 3;
  p.u = 3;
  p.u1 = 4;
  EXPECT_EQ(code_of([&] { theorem1(p); }), Errc::kBadParams);
}

TEST(Theorem2, GoldenGF3) {
  const MarginallyCoupledDesign d = theorem2(subspace(3, 4, 3, 3, Item::kI));
  const std::vector<GFVector> e_star = {GFVector::of({0, 0, 1, 0}), GFVector::of({0, 1, 0, 0}),
                                        GFVector::of({1, 0, 0, 0}), GFVector::of({1, 2, 2, 0})};
  EXPECT_EQ(std::set<GFVector>(d.provenance.z.begin(), d.provenance.z.end()),
            std::set<GFVector>(e_star.begin(), e_star.end()));
  EXPECT_EQ(d.d1.runs(), 81u);
  EXPECT_EQ(d.d1.factors(), 4u);
  EXPECT_EQ(d.d2.factors(), 9u);
  EXPECT_TRUE(check_oa_strength(d.d1, 2).passed());
  EXPECT_EQ(d.provenance.b_indices, (std::vector<std::size_t>{0, 1, 2}));
  expect_valid_mcd(d);
}

TEST(Theorem2, ParameterGridGF3) {
  const auto rows = testing::read_fixture("subspace_s3_u4_u1_3.txt");
  ASSERT_EQ(rows.size(), 4u);
  const auto catalog = enumerate_theorem2(3, 4, 4);
  for (const auto& r : rows) {
    const int v = r[0];
    for (Item item : {Item::kI, Item::kII}) {
      const std::size_t off = item == Item::kI ? 1 : 4;
      const MarginallyCoupledDesign d = theorem2(subspace(3, 4, 3, v, item));
      EXPECT_EQ(static_cast<int>(d.d1.factors()), r[off]) << "v=" << v;
      EXPECT_EQ(static_cast<int>(d.d2.factors()), r[off + 2]) << "v=" << v;
      const int m = static_cast<int>(d.d1.factors());
      EXPECT_TRUE(check_oa_strength(d.d1, std::min(r[off + 1], m)).passed());
      bool found = false;
      for (const auto& row : catalog)
        if (row.u1 == 3 && row.v == v && row.item == item) {
          EXPECT_EQ(row.d1.strength, r[off + 1]);
          found = true;
        }
      EXPECT_TRUE(found);
      expect_valid_mcd(d);
    }
  }
}

TEST(Theorem2, VRangeAndBIndices) {
  EXPECT_EQ(code_of([] { theorem2(subspace(3, 4, 3, 5, Item::kI)); }), Errc::kVOutOfRange);
  EXPECT_EQ(code_of([] { theorem2(subspace(3, 4, 3, 0, Item::kI)); }), Errc::kVOutOfRange);
  ConstructionParams p = subspace(3, 4, 3, 2, Item::kI);
  p.b_indices = std::vector<std::size_t>{0, 1, 2};
  EXPECT_EQ(code_of([&] { theorem2(p); }), Errc::kVOutOfRange);
  p.v.reset();
  const MarginallyCoupledDesign d = theorem2(p);
  EXPECT_EQ(d.params.v, 3);
  expect_valid_mcd(d);
}

TEST(Theorem2, DependentBIndicesAreNoted) {
  // Over GF(5) with u1 = 3 some triple of the 16 prefixes is dependent.
  const Field f = Field::create(5);
  const PartitionedA p = partition_A(build_A(f, 3, 3));
  std::vector<std::size_t> dependent;
  for_each_combination(p.n_b(), 3, [&](std::span<const std::size_t> idx) {
    std::vector<GFVector> b;
    for (std::size_t i : idx) b.push_back(p.b_vectors[i]);
    if (rank(f, b) == 3) return true;
    dependent.assign(idx.begin(), idx.end());
    return false;
  });
  ASSERT_EQ(dependent.size(), 3u);
  ConstructionParams params = subspace(5, 3, 3, 3, Item::kI);
  params.b_indices = dependent;
  const MarginallyCoupledDesign d = theorem2(params);
  EXPECT_FALSE(d.provenance.notes.empty());
  expect_valid_mcd(d);
}

TEST(Theorem2, TwoLevelAndLargerFields) {
  for (int s : {2, 4, 5}) {
    const Field f = Field::create(s);
    for (int u1 = 1; u1 <= 3; ++u1) {
      const int n_star = find_bstar(f, u1).n_star;
      for (int v = 1; v <= n_star; ++v)
        for (Item item : {Item::kI, Item::kII}) {
          const MarginallyCoupledDesign d = theorem2(subspace(s, 3, u1, v, item));
          expect_valid_mcd(d);
        }
    }
  }
}

TEST(AntiMirror, Vector) {
  EXPECT_EQ(anti_mirror(GFVector::of({0, 0, 1})), GFVector::of({1, 1, 0}));
  EXPECT_EQ(anti_mirror(GFVector::of({})), GFVector::of({}));
}

TEST(AntiMirror, TripleStratification) {
  const std::array<std::array<int, 4>, 6> cases = {{
      {5, 2, 2, 8}, {5, 3, 4, 4}, {6, 2, 2, 16}, {6, 3, 4, 8}, {6, 4, 8, 4}, {5, 4, 8, 2}}};
  for (const auto& [u, u1, m, k] : cases) {
    const MarginallyCoupledDesign d = anti_mirror_construction(u, u1, Seed::value(9));
    EXPECT_EQ(static_cast<int>(d.d1.factors()), m) << u << "," << u1;
    EXPECT_EQ(static_cast<int>(d.d2.factors()), k) << u << "," << u1;
    expect_valid_mcd(d);
    const std::array<int, 3> cells{2, 2, 2};
    if (k >= 3) {
      EXPECT_TRUE(check_all_projections(d.t_tilde.data(), d.t_tilde.levels(), cells).passed());
      EXPECT_TRUE(d.provenance.notes.empty());
    } else {
      EXPECT_FALSE(d.provenance.notes.empty());
    }
    for (const auto& gen : d.provenance.generators) EXPECT_EQ(gen[0][0].index(), 1);
  }
}

TEST(AntiMirror, BadParams) {
  for (auto [u, u1] : {std::pair{5, 1}, std::pair{5, 5}, std::pair{3, 3}}) {
    EXPECT_EQ(code_of([&] { anti_mirror_construction(u, u1, Seed::identity()); }),
              Errc::kBadParams);
  }
  ConstructionParams p;
  p.method = Method::kAntiMirror;
  p.s = 3;
  p.u = 5;
  p.u1 = 2;
  EXPECT_EQ(code_of([&] { construct(p); }), Errc::kBadParams);
}

// Leading digits of the stratified generator choice form a strength-two
// array, so every pair of D2 columns is s x s stratified.
TEST(StratifiedGenerators, PairwiseStratification) {
  for (auto [s, u] : {std::pair{2, 4}, std::pair{3, 3}, std::pair{3, 4}, std::pair{4, 3}}) {
    const Field f = Field::create(s);
    int k = 1;
    for (int i = 1; i < u - 1; ++i) k = k * s + 1;
    const std::vector<GFVector> a = build_A(f, u, 1).vectors;
    ConstructionParams p = general(s, {GFVector::unit(static_cast<std::size_t>(u), 0)},
                                   std::vector<GFVector>(a.begin(), a.begin() + k));
    p.generators = GeneratorMode::kStratified;
    p.seed = Seed::value(4);
    const MarginallyCoupledDesign d = general_construction(p);
    ASSERT_EQ(static_cast<int>(d.d2.factors()), k);
    const std::array<int, 2> cells{s, s};
    EXPECT_TRUE(check_all_projections(d.d2.data(), static_cast<int>(d.d2.runs()), cells).passed());
    std::vector<GFVector> firsts;
    for (const auto& g : d.provenance.generators) firsts.push_back(g[0]);
    EXPECT_TRUE(every_subset_independent(f, firsts, 2));
    expect_valid_mcd(d);

    std::vector<GFVector> too_many(a.begin(), a.begin() + k + 1);
    EXPECT_EQ(code_of([&] { stratified_generator_choice(f, too_many); }), Errc::kTooManyColumns);
  }
}

TEST(StratifiedGenerators, SingleColumn) {
  const Field f = Field::create(3);
  const auto g = stratified_generator_choice(f, {GFVector::of({1, 1, 1})});
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(rank(f, g[0]), 2);
}

TEST(OrthogonalWitness, ExhaustiveSmallFields) {
  for (int s : {3, 4, 5}) {
    const Field f = Field::create(s);
    for (int u1 = 2; u1 <= 4; ++u1)
      for (int u = u1; u <= std::min(u1 + 1, 4); ++u) {
        const VectorSetA a = build_A(f, u, u1);
        const std::set<GFVector> members(a.vectors.begin(), a.vectors.end());
        for (const auto& z : enumerate_E(f, u, u1)) {
          int weight = 0;
          for (GFElement c : z) weight += !c.is_zero();
          if (weight < 2) {
            EXPECT_EQ(code_of([&] { proposition1_witness(f, u, u1, z); }), Errc::kNotApplicable);
            continue;
          }
          const GFVector x = proposition1_witness(f, u, u1, z);
          EXPECT_TRUE(members.count(x)) << z << " -> " << x;
          EXPECT_TRUE(dot(f, z, x).is_zero()) << z << " -> " << x;
        }
      }
  }
}

TEST(OrthogonalWitness, NotApplicable) {
  EXPECT_EQ(code_of([] { proposition1_witness(Field::create(2), 3, 2, GFVector::of({1, 1, 0})); }),
            Errc::kNotApplicable);
  EXPECT_EQ(code_of([] { proposition1_witness(Field::create(3), 3, 2, GFVector::of({1, 1, 1})); }),
            Errc::kNotApplicable);
}

TEST(Construct, SeedsChangeOnlyD2) {
  ConstructionParams p = subspace(3, 4, 3, 2, Item::kII);
  p.seed = Seed::value(1);
  const MarginallyCoupledDesign a = construct(p);
  const MarginallyCoupledDesign b = construct(p);
  p.seed = Seed::value(2);
  const MarginallyCoupledDesign c = construct(p);
  EXPECT_EQ(a.d2.data(), b.d2.data());
  EXPECT_NE(a.d2.data(), c.d2.data());
  EXPECT_EQ(a.d1.data(), c.d1.data());
  EXPECT_EQ(a.t_tilde, c.t_tilde);
}

TEST(Construct, NameRoundTrips) {
  for (Method m : {Method::kGeneral, Method::kTheorem1, Method::kTheorem2, Method::kAntiMirror})
    EXPECT_EQ(parse_method(method_name(m)), m);
  EXPECT_EQ(method_name(Method::kAntiMirror), "anti-mirror");
  EXPECT_FALSE(parse_method("theorem3").has_value());
  EXPECT_EQ(parse_item("ii"), Item::kII);
  EXPECT_FALSE(parse_item("iii").has_value());
  EXPECT_EQ(parse_generator_mode("stratified"), GeneratorMode::kStratified);
}

}  // namespace
}  // namespace mcd
