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

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "mcd/error.hpp"
#include "mcd/linalg.hpp"
#include "oracles.hpp"

namespace mcd {
namespace {

std::vector<GFVector> vectors_from(const std::vector<std::vector<int>>& rows) {
  std::vector<GFVector> out;
  for (const auto& r : rows) out.push_back(GFVector::of(r));
  return out;
}

TEST(EnumerateTuples, BaseSOrderFirstCoordinateMostSignificant) {
  const Field f = Field::create(3);
  const auto t = enumerate_tuples(f, 2);
  ASSERT_EQ(t.size(), 9u);
  EXPECT_EQ(t[0], GFVector::of({0, 0}));
  EXPECT_EQ(t[1], GFVector::of({0, 1}));
  EXPECT_EQ(t[3], GFVector::of({1, 0}));
  EXPECT_EQ(t[8], GFVector::of({2, 2}));
  EXPECT_TRUE(std::is_sorted(t.begin(), t.end()));
}

TEST(EnumerateTuples, CapEnforced) {
  EXPECT_EQ(capped_power(3, 5), 243);
  EXPECT_LT(capped_power(32, 5), 0);
  try {
    enumerate_tuples(Field::create(32), 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kTooLarge);
  }
  EXPECT_EQ(enumerate_tuples(Field::create(2), 0).size(), 1u);
}

TEST(Rank, SmallCases) {
  const Field f = Field::create(3);
  EXPECT_EQ(rank(f, vectors_from({{1, 2, 0}, {2, 1, 0}})), 1);
  EXPECT_EQ(rank(f, vectors_from({{1, 2, 0}, {0, 0, 1}, {1, 1, 0}})), 3);
  EXPECT_EQ(rank(f, vectors_from({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}})), 2);
  EXPECT_EQ(rank(f, std::vector<GFVector>{}), 0);
  EXPECT_EQ(rank(f, GFMatrix::identity(4)), 4);
}

TEST(Rank, RaggedColumnsRejected) {
  try {
    GFMatrix::from_columns(vectors_from({{1, 0}, {1, 0, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kDimensionMismatch);
  }
}

TEST(OrthogonalComplement, GoldenGF3) {
  const Field f = Field::create(3);
  const SubspaceBasis b = orthogonal_complement_basis(f, GFVector::of({1, 2, 0}));
  EXPECT_EQ(b.dimension(), 2u);
  const auto span = enumerate_span(f, b);
  const std::set<GFVector> got(span.begin(), span.end());
  const auto expected_rows = testing::read_fixture("gf3_u3_complement.txt");
  ASSERT_EQ(expected_rows.size(), 9u);
  const auto expected = vectors_from(expected_rows);
  EXPECT_EQ(got, std::set<GFVector>(expected.begin(), expected.end()));
}

// O(x) by brute force for every nonzero x of small spaces.
TEST(OrthogonalComplement, MatchesBruteForce) {
  for (int s : {2, 3, 4, 5}) {
    const Field f = Field::create(s);
    for (int u : {2, 3}) {
      const auto all = enumerate_tuples(f, u);
      for (const auto& x : all) {
        if (x.is_zero()) continue;
        std::set<GFVector> expected;
        for (const auto& y : all)
          if (dot(f, x, y).is_zero()) expected.insert(y);
        const SubspaceBasis b = orthogonal_complement_basis(f, x);
        ASSERT_EQ(b.dimension(), static_cast<std::size_t>(u - 1));
        EXPECT_EQ(rank(f, b.vectors), u - 1);
        const auto span = enumerate_span(f, b);
        EXPECT_EQ(std::set<GFVector>(span.begin(), span.end()), expected);
        EXPECT_EQ(span.size(), expected.size());
      }
    }
  }
}

TEST(OrthogonalComplement, ZeroVectorRejected) {
  try {
    orthogonal_complement_basis(Field::create(3), GFVector(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::kZeroVector);
  }
}

TEST(GenerateLinearArray, GoldenGF3) {
  const Field f = Field::create(3);
  const GFMatrix gen = GFMatrix::from_columns(vectors_from({{0, 0, 1}, {1, 1, 0}, {1, 2, 0}}));
  const IntMatrix got = generate_linear_array(f, gen);
  EXPECT_EQ(got, IntMatrix::from_rows(testing::read_fixture("gf3_u3_generated_array.txt")));
}

TEST(GenerateLinearArray, RowsAreCoefficientCombinations) {
  const Field f = Field::create(4);
  const auto cols = vectors_from({{1, 0}, {1, 3}, {2, 1}});
  const IntMatrix a = generate_linear_array(f, GFMatrix::from_columns(cols));
  const auto lambdas = enumerate_tuples(f, 2);
  ASSERT_EQ(a.rows(), lambdas.size());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      EXPECT_EQ(a(r, c), dot(f, lambdas[r], cols[c]).index());
}

// Linear array strength is the largest t with every t columns independent;
// the count-based oracle must agree for random column sets.
TEST(LinearStrength, AgreesWithCountingOracle) {
  std::mt19937 rng(20261014);
  for (int s : {2, 3, 4}) {
    const Field f = Field::create(s);
    const auto pool = enumerate_tuples(f, 3);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t m = 2 + rng() % 4;
      std::vector<GFVector> cols;
      while (cols.size() < m) {
        const GFVector& v = pool[rng() % pool.size()];
        if (!v.is_zero()) cols.push_back(v);
      }
      const int t = linear_strength(f, cols, static_cast<int>(m));
      const IntMatrix a = generate_linear_array(f, GFMatrix::from_columns(cols));
      const std::vector<int> levels(m, s);
      if (t > 0) EXPECT_TRUE(testing::naive_is_oa(a, levels, t));
      if (t < static_cast<int>(m)) EXPECT_FALSE(testing::naive_is_oa(a, levels, t + 1));
    }
  }
}

TEST(LinearStrength, CappedByMaxT) {
  const Field f = Field::create(3);
  const auto cols = vectors_from({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  EXPECT_EQ(linear_strength(f, cols, 3), 3);
  EXPECT_EQ(linear_strength(f, cols, 2), 2);
}

TEST(EverySubsetIndependent, Basics) {
  const Field f = Field::create(2);
  const auto v = vectors_from({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}});
  EXPECT_TRUE(every_subset_independent(f, v, 3));
  EXPECT_FALSE(every_subset_independent(f, vectors_from({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), 3));
  EXPECT_TRUE(every_subset_independent(f, vectors_from({{1, 0, 0}, {0, 1, 0}, {1, 1, 0}}), 2));
  // k larger than the set means the whole set.
  EXPECT_TRUE(every_subset_independent(f, vectors_from({{1, 0, 0}, {0, 1, 0}}), 5));
}

TEST(CompleteBasis, ExtendsToFullRank) {
  const Field f = Field::create(3);
  const auto pool = enumerate_tuples(f, 4);
  const auto basis = complete_basis(f, vectors_from({{1, 1, 0, 0}}), pool, 4);
  ASSERT_EQ(basis.size(), 4u);
  EXPECT_EQ(basis[0], GFVector::of({1, 1, 0, 0}));
  EXPECT_EQ(rank(f, basis), 4);
}

}  // namespace
}  // namespace mcd
