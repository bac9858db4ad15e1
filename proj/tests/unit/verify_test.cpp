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

#include <random>
#include <vector>

#include "mcd/design.hpp"
#include "mcd/error.hpp"
#include "mcd/linalg.hpp"
#include "mcd/verify.hpp"
#include "oracles.hpp"
#include "random_designs.hpp"

namespace mcd {
namespace {

IntMatrix linear_array(int s, const std::vector<std::vector<int>>& cols) {
  std::vector<GFVector> v;
  for (const auto& c : cols) v.push_back(GFVector::of(c));
  return generate_linear_array(Field::create(s), GFMatrix::from_columns(v));
}

TEST(OAStrength, FullFactorialHasFullStrength) {
  const IntMatrix a = linear_array(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const std::vector<int> levels(3, 3);
  for (int t = 0; t <= 3; ++t) EXPECT_TRUE(check_oa_strength(a, levels, t).passed()) << t;
}

TEST(OAStrength, DependentColumnsFailAtThree) {
  const IntMatrix a = linear_array(2, {{1, 0}, {0, 1}, {1, 1}});
  const std::vector<int> levels(3, 2);
  EXPECT_TRUE(check_oa_strength(a, levels, 2).passed());
  const VerificationReport r = check_oa_strength(a, levels, 3);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.first_failure()->columns, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(OAStrength, MixedLevels) {
  // A 9-level column next to a 3-level column from the replacement golden.
  const IntMatrix d = IntMatrix::from_rows(testing::read_fixture("gf3_u3_replacement.txt"));
  const std::vector<int> levels = {9, 3};
  EXPECT_TRUE(check_oa_strength(d, levels, 2).passed());
  EXPECT_TRUE(testing::naive_is_oa(d, levels, 2));
}

TEST(OAStrength, ErrorsOnBadArguments) {
  const IntMatrix a = linear_array(2, {{1, 0}, {0, 1}});
  const std::vector<int> levels(2, 2);
  try {
    check_oa_strength(a, levels, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kStrengthExceedsColumns);
  }
  const std::vector<int> short_levels(1, 2);
  EXPECT_THROW(check_oa_strength(a, short_levels, 1), Error);
}

// Strength t implies strength t-1.
TEST(OAStrength, Monotone) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int s = 2 + static_cast<int>(rng() % 2);
    const IntMatrix a = testing::random_balanced(rng, s, s, 2 + rng() % 3);
    const std::vector<int> levels(a.cols(), s);
    bool previous = true;
    for (int t = 0; t <= static_cast<int>(a.cols()); ++t) {
      const bool now = check_oa_strength(a, levels, t).passed();
      if (!previous) EXPECT_FALSE(now);
      EXPECT_EQ(now, testing::naive_is_oa(a, levels, t));
      previous = now;
    }
  }
}

TEST(CheckMcd, ConstructedGoldenPasses) {
  const IntMatrix rep = IntMatrix::from_rows(testing::read_fixture("gf3_u3_replacement.txt"));
  std::vector<std::vector<int>> d1{rep.column(1)};
  const CollapsedDesign t(IntMatrix::from_columns({rep.column(0)}), 3);
  const IntMatrix d2 = expand_levels(t, Seed::identity()).data();
  EXPECT_TRUE(check_mcd(IntMatrix::from_columns(d1), d2, 3).passed());
}

TEST(CheckMcd, ReportsCouplingColumn) {
  // Two runs of each D1 level land in the same interval of x2.
  const IntMatrix d1 = IntMatrix::from_rows({{0}, {1}, {0}, {1}});
  const IntMatrix d2 = IntMatrix::from_rows({{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  EXPECT_TRUE(check_mcd(d1, d2, 2).passed());
  const IntMatrix bad = IntMatrix::from_rows({{0, 0}, {1, 2}, {2, 1}, {3, 3}});
  const VerificationReport r = check_mcd(d1, bad, 2);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.first_failure()->name, "coupling");
  EXPECT_EQ(r.first_failure()->columns, (std::vector<std::size_t>{1}));
}

TEST(CheckMcd, ReportsPermutationAndLevelFailures) {
  const IntMatrix d1 = IntMatrix::from_rows({{0}, {1}, {0}, {1}});
  const VerificationReport perm = check_mcd(d1, IntMatrix::from_rows({{0}, {1}, {1}, {3}}), 2);
  ASSERT_FALSE(perm.passed());
  EXPECT_EQ(perm.first_failure()->name, "lhd_permutation");
  const VerificationReport lvl =
      check_mcd(IntMatrix::from_rows({{0}, {2}, {0}, {1}}), IntMatrix::from_rows({{0}, {1}, {2}, {3}}), 2);
  ASSERT_FALSE(lvl.passed());
  EXPECT_EQ(lvl.first_failure()->name, "d1_levels");
}

TEST(CheckMcd, ArgumentErrors) {
  const IntMatrix d1 = IntMatrix::from_rows({{0}, {1}, {0}, {1}});
  try {
    check_mcd(d1, IntMatrix::from_rows({{0}, {1}}), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kRunCountMismatch);
  }
  try {
    check_mcd(d1, IntMatrix::from_rows({{0}, {1}, {2}, {3}}), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kNotDivisible);
  }
}

TEST(CheckMcd, AgreesWithDefinition) {
  std::mt19937_64 rng(2026);
  int passing = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const testing::CandidateDesign c = testing::random_candidate(rng);
    const bool lemma = check_mcd(c.d1, c.d2, c.s).passed();
    EXPECT_EQ(lemma, testing::definitional_mcd(c.d1, c.d2, c.s)) << c.kind << " trial " << trial;
    passing += lemma;
  }
  // Both outcomes must be exercised.
  EXPECT_GT(passing, 30);
  EXPECT_LT(passing, 270);
}

TEST(NonCascading, DetectsRelabeledColumn) {
  const IntMatrix t = IntMatrix::from_rows({{0, 1, 0}, {1, 0, 0}, {2, 2, 1}, {0, 1, 1}, {1, 0, 2}, {2, 2, 2}});
  const VerificationReport r = check_noncascading(t);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.first_failure()->columns, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(check_noncascading(t.select_columns(std::vector<std::size_t>{0, 2})).passed());
}

TEST(GridStratification, MatchesNaiveCount) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix d = testing::random_balanced(rng, 1, 8, 3);
    const std::vector<std::size_t> dims = {0, 2};
    const std::vector<int> cells = {2, 2};
    EXPECT_EQ(check_grid_stratification(d, 8, dims, cells).passed(),
              testing::naive_grid_balanced(d, 8, dims, cells));
  }
}

TEST(GridStratification, BadGridRejected) {
  const IntMatrix d = IntMatrix::from_rows({{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  const std::vector<std::size_t> dims = {0, 1};
  const std::vector<int> three = {3, 2};
  const std::vector<int> one = {2};
  for (auto cells : {std::span<const int>(three), std::span<const int>(one)}) {
    try {
      check_grid_stratification(d, 4, dims, cells);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), Errc::kBadGrid);
    }
  }
}

TEST(GridStratification, AllProjectionsNamesFirstFailure) {
  // Columns 0 and 2 share their halves row for row.
  const IntMatrix d = IntMatrix::from_rows({{0, 0, 0}, {1, 2, 1}, {2, 1, 3}, {3, 3, 2}});
  const std::vector<int> cells = {2, 2};
  const VerificationReport r = check_all_projections(d, 4, cells);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.first_failure()->name, "stratification_2x2");
  EXPECT_EQ(r.first_failure()->columns, (std::vector<std::size_t>{0, 2}));
}

}  // namespace
}  // namespace mcd
