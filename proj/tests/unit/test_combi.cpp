// Copyright 2026 The rigidmat Authors
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

#include "../common/fixtures.hpp"
#include "rigidmat/combi/bipartite.hpp"
#include "rigidmat/generic/builders.hpp"
#include "rigidmat/matroid/properties.hpp"
#include "rigidmat/rigidity/rigidity.hpp"

using namespace rigidmat;
using namespace rigidmat::combi;
using matroid::Mask;

namespace {

RowFamily family(int n, const std::vector<std::vector<int>>& one_based) {
  std::vector<std::vector<int>> lists;
  for (const auto& l : one_based) {
    lists.emplace_back();
    for (int j : l) lists.back().push_back(j - 1);
  }
  return RowFamily::from_lists(static_cast<int>(one_based.size()), n, lists);
}

}  // namespace

TEST(RowFamilyTest, GridRoundTrip) {
  const auto f = family(4, {{1, 3}, {}, {2, 3, 4}});
  EXPECT_EQ(f.size(), 5);
  EXPECT_EQ(RowFamily::from_grid_mask(f.to_grid_mask(), 3, 4).sets, f.sets);
  EXPECT_EQ(f.transposed().transposed().sets, f.sets);
  const auto c = MultiplicityClasses::of(family(4, {{1, 2}, {2, 3}, {2, 3}, {2}}));
  EXPECT_EQ(c.s1, 0b0001u);
  EXPECT_EQ(c.s2, 0b0100u);
  EXPECT_EQ(c.s3, 0b0000u);
  EXPECT_EQ(MultiplicityClasses::of(family(4, {{1, 2}, {2, 3}, {3}})).s2, 0b0110u);
}

TEST(DisjointTest, Examples) {
  EXPECT_TRUE(disjoint_independent(family(4, {{}, {}}), 1, 2));
  EXPECT_FALSE(disjoint_independent(family(4, {{1, 2, 3}}), 1, 2));
  EXPECT_FALSE(disjoint_independent(family(6, {{1, 2}, {3, 4}, {5, 6}}), 2, 2));
  EXPECT_TRUE(disjoint_independent(family(6, {{1, 2}, {3, 4}, {5}}), 3, 2));
  EXPECT_THROW(disjoint_independent(family(3, {{1}, {1}}), 2, 2), InvalidArgument);
}

TEST(S1Test, Examples) {
  EXPECT_TRUE(s1_independent(family(3, {{}, {}}), 2));
  EXPECT_FALSE(s1_independent(family(3, {{1}, {1}}), 3));
  EXPECT_TRUE(s1_independent(family(4, {{1, 2}, {3}}), 3));
  EXPECT_FALSE(s1_independent(family(4, {{1, 2}, {3, 4}}), 3));
}

TEST(S2Test, Examples) {
  EXPECT_FALSE(s2_independent(family(3, {{1}, {1}, {1}}), 3));
  EXPECT_TRUE(s2_independent(family(3, {{1, 2}, {1, 2}, {}}), 2));
  EXPECT_FALSE(s2_independent(family(3, {{1, 2}, {1, 2}, {3}}), 2));
  EXPECT_FALSE(s2_independent(family(3, {{1, 2, 3}, {}}), 2));
}

TEST(S3Test, KnownPatterns) {
  EXPECT_FALSE(s3_independent(family(5, {{1, 2}, {1, 2}, {}, {4, 5}, {4, 5}}), 3));
  EXPECT_TRUE(s3_violations(family(5, {{1, 2}, {1, 2}, {}, {4, 5}, {4, 5}}), 3).two_pairs);

  const auto diamond = RowFamily::from_grid_mask(fixtures::diamond_5x9(), 5, 9);
  EXPECT_EQ(diamond.sets, family(9, {{1, 2, 3}, {4, 5, 6}, {8, 9}, {7, 9}, {7, 8}}).sets);
  const auto v = s3_violations(diamond, 4);
  EXPECT_TRUE(v.two_rows);
  EXPECT_FALSE(v.four_fold || v.single_row || v.two_pairs || v.global);
  EXPECT_FALSE(s3_independent(diamond, 4));
  EXPECT_TRUE(s3_independent(family(3, {{}, {}, {}}), 1));
}

TEST(TensorDetTest, DispatchAndDegenerateCases) {
  EXPECT_TRUE(tensor_independent_det(Mask{0}, 3, 3, 0, 2));
  EXPECT_FALSE(tensor_independent_det(Mask{1}, 3, 3, 0, 2));
  EXPECT_THROW(tensor_independent_det(Mask{1}, 5, 5, 4, 4), Unsupported);
  const auto diamond = RowFamily::from_grid_mask(fixtures::diamond_5x9(), 5, 9);
  EXPECT_EQ(tensor_independent_det(diamond, 3, 4), s3_independent(diamond, 4));
  // r <= 3 < s goes through the transpose.
  const Mask x = fixtures::diamond_5x5() | fixtures::cells(5, {{3, 1}, {3, 4}});
  EXPECT_EQ(tensor_independent_det(x, 5, 5, 4, 3), tensor_independent_det(transpose_cells(x, 5, 5), 5, 5, 3, 4));
}

TEST(TensorDetTest, AgreesWithOracleOnFourByFour) {
  for (auto [s, r] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {2, 3}, {3, 3}}) {
    const auto mc = generic::mc_oracle(generic::TensorConfig{4, 4, s, r, 0, std::nullopt, 5, 21});
    const auto table = mc.table(0, mc.full());
    for (Mask x = 0; x < (Mask{1} << 16); ++x)
      ASSERT_EQ(tensor_independent_det(x, 4, 4, s, r), table[x] == matroid::popcount(x)) << s << r << " " << x;
  }
}

TEST(TensorDetTest, CharacteristicInvariance) {
  for (std::uint64_t p : {2u, 3u, 5u}) {
    const auto mc = generic::mc_oracle(generic::TensorConfig{3, 4, 2, 3, p, std::nullopt, 5, 8});
    const auto table = mc.table(0, mc.full());
    for (Mask x = 0; x < (Mask{1} << 12); ++x)
      ASSERT_EQ(tensor_independent_det(x, 3, 4, 2, 3), table[x] == matroid::popcount(x)) << p << " " << x;
  }
}

TEST(LamanTest, KnownPatterns) {
  EXPECT_FALSE(laman_violation(fixtures::star_5x5(), 5, 5, 2, 2).has_value());
  const auto rect = laman_violation(fixtures::star_5x9(), 5, 9, 2, 5);
  ASSERT_TRUE(rect.has_value());
  const auto f = RowFamily::from_grid_mask(fixtures::star_5x9(), 5, 9);
  EXPECT_GT(rectangle_count(f, *rect), laman_bound(*rect, 2, 5));
  EXPECT_GE(rect->rows.size(), 2u);
  EXPECT_GE(rect->cols.size(), 5u);
  EXPECT_EQ(rank_bipartite_fast(fixtures::star_5x9(), 5, 9, 2, 5), 17);

  const auto full = laman_violation(matroid::low_bits(4), 2, 2, 1, 1);
  ASSERT_TRUE(full.has_value());
  EXPECT_EQ(full->to_string(), "{1,2} x {1,2}");
  EXPECT_THROW(laman_violation(Mask{0}, 25, 2, 1, 1), BudgetExceeded);
}

TEST(BipartiteRankTest, Examples) {
  EXPECT_EQ(rank_bipartite_fast(matroid::low_bits(25), 5, 5, 2, 2), 16);
  EXPECT_EQ(rank_bipartite_fast(0, 5, 5, 2, 2), 0);
  EXPECT_EQ(rank_bipartite_fast(fixtures::star_5x5(), 5, 5, 2, 2), 15);
  EXPECT_THROW(rank_bipartite_fast(0, 6, 6, 1, 1), Unsupported);
  EXPECT_TRUE(all_circuits_laman(5, 5, 1, 2));
  EXPECT_TRUE(all_circuits_laman(5, 5, 3, 3));
  EXPECT_FALSE(all_circuits_laman(5, 5, 2, 2));
}

TEST(BipartiteRankTest, AgreesWithRigidityOracle) {
  for (auto [m, n, a, b] : std::vector<std::array<int, 4>>{{3, 4, 1, 2}, {4, 4, 2, 2}, {4, 4, 1, 3}, {4, 3, 2, 1}}) {
    const auto rig = rigidity::rigidity_oracle({rigidity::Bipartite{m, n, a, b}, exactalg::RationalsSpec{}, 5, 2});
    const auto table = rig.table(0, rig.full());
    for (Mask x = 0; x < table.size(); ++x) ASSERT_EQ(rank_bipartite_fast(x, m, n, a, b), table[x]) << x;
  }
}

TEST(BipartiteRankTest, TransposeAndAxioms) {
  Rng rng(12);
  for (int t = 0; t < 500; ++t) {
    const Mask x = matroid::random_subset(rng, 20);
    ASSERT_EQ(rank_bipartite_fast(x, 4, 5, 2, 3), rank_bipartite_fast(transpose_cells(x, 4, 5), 5, 4, 3, 2));
  }
  const auto rep = matroid::check_rank_axioms(bipartite_det_oracle(4, 5, 2, 3), 500, rng);
  EXPECT_TRUE(rep.ok()) << rep.first_failure;
}

TEST(BipartiteRankTest, LamanNecessityAndSmallCorank) {
  // With m - a <= 2, dependence is exactly a Laman violation.
  for (auto [m, n, a, b] : std::vector<std::array<int, 4>>{{4, 4, 2, 2}, {4, 4, 2, 3}, {3, 5, 1, 2}, {4, 4, 1, 1}}) {
    for (Mask x = 0; x < (Mask{1} << (m * n)); ++x) {
      const bool independent = rank_bipartite_fast(x, m, n, a, b) == matroid::popcount(x);
      const bool violated = laman_violation(x, m, n, a, b).has_value();
      if (independent) {
        ASSERT_FALSE(violated) << x;
      }
      if (m - a <= 2) {
        ASSERT_EQ(independent, !violated) << x;
      }
    }
  }
}
