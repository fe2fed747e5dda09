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
#include "rigidmat/matroid/operations.hpp"
#include "rigidmat/rigidity/rigidity.hpp"

using namespace rigidmat;
using namespace rigidmat::rigidity;

namespace {

MatroidOracle oracle(const Family& f, std::uint64_t seed = 1) {
  return rigidity_oracle({f, exactalg::RationalsSpec{}, 5, seed});
}

// Pairs {i, m + j} of binom([m + p], 2) in grid order.
Mask cross_pairs(int m, int p) {
  Mask x = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < p; ++j) x |= Mask{1} << detail::pair_column(i, m + j, m + p);
  return x;
}

}  // namespace

TEST(RigidityTest, ExpectedRanks) {
  EXPECT_EQ(expected_rank(Bipartite{3, 4, 0, 0}), 0);
  EXPECT_EQ(expected_rank(Bipartite{5, 5, 2, 2}), 16);
  EXPECT_EQ(expected_rank(Hyper{4, 2}), 5);
  EXPECT_EQ(expected_rank(SymCompletion{4, 2}), 7);
  for (const Family& f : std::vector<Family>{Bipartite{3, 4, 0, 0}, Bipartite{3, 4, 2, 1}, Bipartite{4, 4, 2, 2},
                                             Bipartite{3, 3, 3, 3}, Hyper{4, 2}, Hyper{5, 3}, SymCompletion{4, 2},
                                             SymCompletion{5, 3}})
    EXPECT_EQ(oracle(f).total_rank(), expected_rank(f)) << describe(f);
}

TEST(RigidityTest, MatrixShapes) {
  Rng rng(4);
  const auto b = build_bipartite_matrix(3, 4, 2, 1, rng, exactalg::RationalsSpec{});
  EXPECT_EQ(exactalg::rows(b), 2u * 4 + 1u * 3);
  EXPECT_EQ(exactalg::cols(b), 12u);
  const auto h = build_hyper_matrix(5, 2, rng, exactalg::RationalsSpec{});
  EXPECT_EQ(exactalg::rows(h), 10u);
  EXPECT_EQ(exactalg::cols(h), 10u);
  const auto s = build_sym_completion_matrix(4, 2, rng, exactalg::RationalsSpec{});
  EXPECT_EQ(exactalg::cols(s), 10u);
  EXPECT_EQ(detail::pair_column(0, 1, 4), 0u);
  EXPECT_EQ(detail::pair_column(3, 2, 4), 5u);
}

TEST(RigidityTest, StarIsACircuit) {
  const auto b = oracle(Bipartite{5, 5, 2, 2});
  const Mask star = fixtures::star_5x5();
  EXPECT_EQ(matroid::popcount(star), 16);
  EXPECT_EQ(b.rank(star), 15);
  for (Mask x = star; x; x &= x - 1) EXPECT_TRUE(matroid::is_independent(b, star & ~(x & (~x + 1))));
  EXPECT_FALSE(combi::laman_violation(star, 5, 5, 2, 2).has_value());
}

TEST(RigidityTest, SymCompletionRejectsCharacteristicTwo) {
  EXPECT_THROW(rigidity_oracle({SymCompletion{4, 2}, exactalg::field_for_characteristic(2), 2, 1}), InvalidArgument);
  EXPECT_NO_THROW(rigidity_oracle({Hyper{4, 2}, exactalg::field_for_characteristic(2), 2, 1}));
  EXPECT_THROW(validate(Bipartite{3, 3, 4, 0}), InvalidArgument);
  EXPECT_THROW(validate(Hyper{3, 4}), InvalidArgument);
}

TEST(RigidityTest, CrossRestrictionsAreBipartite) {
  for (auto [m, p, d] : std::vector<std::array<int, 3>>{{2, 3, 1}, {3, 3, 2}, {3, 4, 2}}) {
    const auto bip = oracle(Bipartite{m, p, d, d});
    const Mask cross = cross_pairs(m, p);
    for (const Family& f : std::vector<Family>{Hyper{m + p, d}, SymCompletion{m + p, d}}) {
      const auto whole = oracle(f, 7);
      const auto r = matroid::restriction(whole, EdgeSet(whole.ground(), cross));
      EXPECT_TRUE(matroids_equal(r, bip, matroid::Exhaustive{}).equal) << describe(f);
    }
  }
}

TEST(RigidityTest, GraphRigidityInThePlane) {
  const auto g = graph_rigidity(4, 2);
  EXPECT_EQ(g.size(), 6u);
  EXPECT_EQ(g.total_rank(), 5);
  EXPECT_EQ(g.rank(0b011111), 5);
  EXPECT_EQ(graph_rigidity(5, 1).total_rank(), 4);
}

TEST(DualityTest, SmallCasesExhaustive) {
  for (const Family& f : std::vector<Family>{Bipartite{3, 3, 1, 1}, Bipartite{3, 4, 2, 1}, SymCompletion{4, 2},
                                             Hyper{5, 2}, Hyper{4, 1}}) {
    const auto rep = verify_duality(f, 5, 11, matroid::Exhaustive{});
    EXPECT_TRUE(rep.equal) << describe(f);
    EXPECT_TRUE(rep.exhaustive);
    EXPECT_EQ(rep.rank_dual_rigidity, rep.rank_generic);
  }
}

TEST(DualityTest, SampledOnLargerGrid) {
  const auto rep = verify_duality(Bipartite{4, 5, 2, 2}, 3, 5, matroid::Sampled{400, 2});
  EXPECT_TRUE(rep.equal);
  EXPECT_FALSE(rep.exhaustive);
  EXPECT_EQ(rep.rank_generic, 6);
  EXPECT_EQ(rep.rank_dual_rigidity, 6);
}

TEST(ConeTest, ConingRaisesTheMatchingParameter) {
  // G independent in B_{m,n}(a,b) iff its left cone is in B_{m+1,n}(a+1,b).
  const int m = 3, n = 3, a = 1, b = 1;
  const auto base = oracle(Bipartite{m, n, a, b});
  const auto left = oracle(Bipartite{m + 1, n, a + 1, b});
  const auto right = oracle(Bipartite{m, n + 1, a, b + 1});
  for (Mask x = 0; x < (Mask{1} << (m * n)); ++x) {
    const bool ind = matroid::is_independent(base, x);
    ASSERT_EQ(ind, matroid::is_independent(left, combi::cone_left(x, m, n))) << x;
    ASSERT_EQ(ind, matroid::is_independent(right, combi::cone_right(x, m, n))) << x;
  }
}
