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
#include "rigidmat/exactalg/rank.hpp"
#include "rigidmat/generic/builders.hpp"
#include "rigidmat/matroid/operations.hpp"

using namespace rigidmat;
using namespace rigidmat::generic;
using matroid::Mask;

namespace {

MatroidOracle tensor(int m, int n, int s, int r, std::uint64_t p = 0, int trials = 5, std::uint64_t seed = 1) {
  return mc_oracle(TensorConfig{m, n, s, r, p, std::nullopt, trials, seed});
}

std::size_t rank_of(const exactalg::Matrix& m, std::vector<std::size_t> cols) {
  return exactalg::mat_rank_of_columns(m, std::span<const std::size_t>(cols));
}

std::size_t full_rank(const exactalg::Matrix& m) {
  std::vector<std::size_t> all(exactalg::cols(m));
  std::iota(all.begin(), all.end(), std::size_t{0});
  return rank_of(m, all);
}

}  // namespace

TEST(ConfigTest, FieldResolution) {
  EXPECT_TRUE(std::holds_alternative<exactalg::RationalsSpec>(resolve_field(0, std::nullopt)));
  const auto f2 = resolve_field(2, std::nullopt);
  EXPECT_EQ(exactalg::characteristic(f2), 2u);
  EXPECT_GE(exactalg::sample_space_log2(f2), 30.0);
  EXPECT_THROW(resolve_field(3, exactalg::FieldSpec{exactalg::PrimeFieldSpec{5}}), InvalidArgument);
  EXPECT_THROW(resolve_field(5, exactalg::FieldSpec{exactalg::PrimeFieldSpec{5}}), InvalidArgument);
  EXPECT_THROW((TensorConfig{2, 2, 3, 1, 0, std::nullopt}.validate()), InvalidArgument);
}

TEST(TensorBuilderTest, RankOneAndFullCases) {
  Rng rng(1);
  EXPECT_EQ(full_rank(build_tensor_columns(TensorConfig{3, 4, 1, 1, 0, std::nullopt}, rng)), 1u);
  EXPECT_EQ(full_rank(build_tensor_columns(TensorConfig{3, 3, 3, 3, 0, std::nullopt}, rng)), 9u);
  const auto m = build_tensor_columns(TensorConfig{5, 5, 3, 3, 0, std::nullopt}, rng);
  EXPECT_EQ(exactalg::rows(m), 9u);
  EXPECT_EQ(rank_of(m, exactalg::mask_bits(fixtures::diamond_5x5())), 7u);
}

TEST(SymBuilderTest, SquaresDependOnCharacteristic) {
  Rng rng(2);
  // Singletons of Sym_3 follow the three pairs.
  const std::vector<std::size_t> squares{3, 4, 5};
  EXPECT_EQ(rank_of(build_sym_columns(PowerConfig{3, 2, 2, std::nullopt}, rng), squares), 2u);
  EXPECT_EQ(rank_of(build_sym_columns(PowerConfig{3, 2, 0, std::nullopt}, rng), squares), 3u);
  EXPECT_EQ(full_rank(build_sym_columns(PowerConfig{4, 1, 0, std::nullopt}, rng)), 1u);
}

TEST(WedgeBuilderTest, Dimensions) {
  Rng rng(3);
  EXPECT_EQ(full_rank(build_wedge_columns(PowerConfig{5, 2, 0, std::nullopt}, rng)), 1u);
  const auto w = build_wedge_columns(PowerConfig{4, 3, 0, std::nullopt}, rng);
  EXPECT_EQ(exactalg::cols(w), 6u);
  EXPECT_EQ(full_rank(w), 3u);
}

TEST(MonteCarloTest, BoundValues) {
  // Rationals sample 2^21 + 1 integers; 4 rows of degree-2 entries.
  const auto b = schwartz_zippel_bound(4, 2, exactalg::RationalsSpec{}, 2);
  EXPECT_EQ(b, mpq_class(64, mpz_class("4398050705409")));
  EXPECT_EQ(sample_set_size(exactalg::ExtensionFieldSpec{2, 30, {}}), mpz_class(1) << 30);
  const auto t = tensor(2, 2, 1, 1);
  EXPECT_FALSE(t.certainty().is_deterministic());
  EXPECT_LT(t.certainty().bound_as_double(), 1e-25);
}

TEST(MonteCarloTest, TrialCountDoesNotChangeSmallScan) {
  const auto one = tensor(4, 4, 2, 2, 0, 1, 17);
  const auto five = tensor(4, 4, 2, 2, 0, 5, 17);
  EXPECT_TRUE(matroids_equal(one, five, matroid::Exhaustive{}).equal);
  EXPECT_EQ(five.total_rank(), 4);
}

TEST(MonteCarloTest, SeedDeterminism) {
  const auto a = tensor(3, 4, 2, 3, 3, 2, 99);
  const auto b = tensor(3, 4, 2, 3, 3, 2, 99);
  for (Mask x = 0; x < (1u << 12); x += 7) ASSERT_EQ(a.rank(x), b.rank(x));
}

TEST(MonteCarloTest, FullRankIsProductOfDimensions) {
  for (auto [m, n, s, r] : std::vector<std::array<int, 4>>{{3, 3, 2, 2}, {4, 3, 2, 3}, {5, 4, 3, 2}})
    EXPECT_EQ(tensor(m, n, s, r).total_rank(), s * r);
}

TEST(PropertyTest, CharacteristicMonotonicity) {
  const auto t0 = tensor(3, 4, 2, 2);
  for (std::uint64_t p : {2u, 3u}) {
    const auto tp = tensor(3, 4, 2, 2, p);
    for (Mask x = 0; x < (1u << 12); ++x)
      if (tp.rank(x) == matroid::popcount(x)) {
        ASSERT_EQ(t0.rank(x), matroid::popcount(x)) << p << " " << x;
      }
  }
}

TEST(PropertyTest, TransposeSymmetry) {
  const auto a = tensor(3, 4, 2, 3);
  const auto b = tensor(4, 3, 3, 2, 0, 5, 4);
  for (Mask x = 0; x < (1u << 12); ++x) ASSERT_EQ(a.rank(x), b.rank(combi::transpose_cells(x, 3, 4))) << x;
}

TEST(PropertyTest, ConingIdentities) {
  // Row 1 contracted: T_{m-1,n}(s-1,r); deleted: T_{m-1,n}(s,r).
  for (auto [m, n, s, r] : std::vector<std::array<int, 4>>{{3, 3, 2, 2}, {4, 4, 2, 3}, {4, 3, 3, 2}}) {
    const auto t = tensor(m, n, s, r);
    const matroid::EdgeSet row(t.ground(), matroid::low_bits(static_cast<std::size_t>(n)));
    const matroid::EdgeSet none(t.ground());
    const auto c = matroid::minor(t, row, none);
    const auto d = matroid::minor(t, none, row);
    EXPECT_TRUE(matroids_equal(c, tensor(m - 1, n, s - 1, r, 0, 5, 3), matroid::Exhaustive{}).equal);
    EXPECT_TRUE(matroids_equal(d, tensor(m - 1, n, s, r, 0, 5, 3), matroid::Exhaustive{}).equal);
  }
}
