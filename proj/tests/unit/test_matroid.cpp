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
#include "rigidmat/generic/builders.hpp"
#include "rigidmat/matroid/operations.hpp"
#include "rigidmat/matroid/properties.hpp"
#include "rigidmat/rigidity/rigidity.hpp"

using namespace rigidmat;
using namespace rigidmat::matroid;
using generic::TensorConfig;

namespace {

MatroidOracle tensor(int m, int n, int s, int r, std::uint64_t p = 0, std::uint64_t seed = 1) {
  return generic::mc_oracle(TensorConfig{m, n, s, r, p, std::nullopt, 5, seed});
}

MatroidOracle bipartite(int m, int n, int a, int b) {
  return rigidity::rigidity_oracle({rigidity::Bipartite{m, n, a, b}, exactalg::RationalsSpec{}, 5, 1});
}

}  // namespace

TEST(GroundSetTest, LabelsAndLookup) {
  const auto g = GroundSet::grid(2, 3);
  EXPECT_EQ(g->size(), 6u);
  EXPECT_EQ(g->label(4).to_string(), "(2,2)");
  EXPECT_EQ(g->find(g->label(5)), std::optional<std::size_t>(5));
  const auto s = GroundSet::pairs_and_singletons(3);
  EXPECT_EQ(s->size(), 6u);
  EXPECT_EQ(s->label(3).kind, Label::Kind::Singleton);
  EXPECT_THROW(EdgeSet(g, Mask{1} << 6), InvalidArgument);
}

TEST(GroundSetTest, EdgeSetAlgebra) {
  const auto g = GroundSet::grid(2, 2);
  const auto e = EdgeSet::from_cells(g, {{0, 0}, {1, 1}});
  EXPECT_EQ(e.size(), 2u);
  EXPECT_TRUE(e.contains(3));
  EXPECT_EQ(e.complement().mask(), 0b0110u);
  EXPECT_EQ(e.with(1).without(0).mask(), 0b1010u);
}

TEST(IndependenceTest, SmallCases) {
  const auto t = tensor(2, 2, 1, 1);
  EXPECT_TRUE(is_independent(t, 0));
  for (std::size_t i = 0; i < 4; ++i) EXPECT_TRUE(is_independent(t, Mask{1} << i));
  EXPECT_FALSE(is_independent(t, 0b0011));
  EXPECT_FALSE(is_independent(bipartite(3, 3, 1, 1), low_bits(9)));
}

TEST(DualTest, RankAndInvolution) {
  const auto b = bipartite(3, 3, 1, 1);
  const auto d = dual(b);
  EXPECT_EQ(d.total_rank(), 4);
  const auto dd = dual(d);
  for (Mask x = 0; x < (1u << 9); ++x) ASSERT_EQ(dd.rank(x), b.rank(x)) << x;
  EXPECT_FALSE(d.certainty().is_deterministic());
  EXPECT_EQ(d.certainty().error_bound, b.certainty().error_bound * 2);
}

TEST(DualTest, BasesAreComplements) {
  const auto t = tensor(3, 3, 2, 2);
  const auto d = dual(t);
  const int r = t.total_rank(), rd = d.total_rank();
  EXPECT_EQ(r + rd, 9);
  for (Mask x = 0; x < (1u << 9); ++x) {
    const bool basis = popcount(x) == r && t.rank(x) == r;
    const bool co_basis = popcount(low_bits(9) & ~x) == rd && d.rank(low_bits(9) & ~x) == rd;
    ASSERT_EQ(basis, co_basis) << x;
  }
}

TEST(DualTest, TablesMatchPointQueries) {
  const auto d = dual(tensor(3, 3, 2, 2));
  const Mask base = 0b000010001, support = 0b111100100;
  const auto t = d.table(base, support);
  const auto bits = MatroidOracle::bit_list(support);
  for (std::uint64_t x = 0; x < t.size(); ++x) ASSERT_EQ(t[x], d.rank(base | MatroidOracle::expand(x, bits)));
}

TEST(MinorTest, EmptyMinorIsIdentity) {
  const auto t = tensor(2, 3, 1, 2);
  const auto mm = minor(t, EdgeSet(t.ground()), EdgeSet(t.ground()));
  EXPECT_TRUE(matroids_equal(t, mm, Exhaustive{}).equal);
}

TEST(MinorTest, ContractingARowLowersBothDimensions) {
  // T_{3,3}(2,2,0) / row 1 = T_{2,3}(1,2,0).
  const auto t = tensor(3, 3, 2, 2);
  const auto c = minor(t, EdgeSet(t.ground(), 0b111), EdgeSet(t.ground()));
  EXPECT_EQ(c.ground()->label(0).to_string(), "(2,1)");
  EXPECT_TRUE(matroids_equal(c, tensor(2, 3, 1, 2, 0, 9), Exhaustive{}).equal);
  // Deleting the row instead gives T_{2,3}(2,2,0).
  const auto dl = minor(t, EdgeSet(t.ground()), EdgeSet(t.ground(), 0b111));
  EXPECT_TRUE(matroids_equal(dl, tensor(2, 3, 2, 2, 0, 9), Exhaustive{}).equal);
}

TEST(MinorTest, OverlapRejectedAndCommutes) {
  const auto t = tensor(3, 3, 2, 2);
  EXPECT_THROW(minor(t, EdgeSet(t.ground(), 1), EdgeSet(t.ground(), 1)), InvalidArgument);
  // (M / {0}) \ {8} against (M \ {8}) / {0}, element ids shifting accordingly.
  const auto cd = minor(t, EdgeSet(t.ground(), 1), EdgeSet(t.ground(), Mask{1} << 8));
  const auto c1 = minor(t, EdgeSet(t.ground(), 1), EdgeSet(t.ground()));
  const auto then_delete = minor(c1, EdgeSet(c1.ground()), EdgeSet(c1.ground(), Mask{1} << 7));
  const auto d1 = minor(t, EdgeSet(t.ground()), EdgeSet(t.ground(), Mask{1} << 8));
  const auto then_contract = minor(d1, EdgeSet(d1.ground(), 1), EdgeSet(d1.ground()));
  EXPECT_TRUE(matroids_equal(cd, then_delete, Exhaustive{}).equal);
  EXPECT_TRUE(matroids_equal(then_delete, then_contract, Exhaustive{}).equal);
}

TEST(CircuitTest, ParallelPair) {
  const auto u = uniform_matroid(GroundSet::grid(1, 2), 1);
  const auto cs = enumerate_circuits(u, 2);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0].mask(), 0b11u);
}

TEST(CircuitTest, FixtureSetsAreCircuits) {
  const auto b = bipartite(5, 5, 2, 2);
  const EdgeSet star(b.ground(), fixtures::star_5x5());
  const auto cs = enumerate_circuits(b, 16, star);
  ASSERT_EQ(cs.size(), 1u);
  EXPECT_EQ(cs[0], star);

  const auto t = tensor(5, 5, 3, 3);
  const EdgeSet diamond(t.ground(), fixtures::diamond_5x5());
  const auto ct = enumerate_circuits(t, 8, diamond);
  ASSERT_EQ(ct.size(), 1u);
  EXPECT_EQ(ct[0], diamond);
}

TEST(CircuitTest, FindCircuit) {
  const auto t = tensor(2, 2, 1, 1);
  EXPECT_EQ(find_circuit(t, EdgeSet(t.ground(), low_bits(4))).size(), 2u);
  EXPECT_THROW(find_circuit(t, EdgeSet(t.ground(), 1)), InvalidArgument);

  const auto b = bipartite(5, 5, 2, 2);
  const EdgeSet star(b.ground(), fixtures::star_5x5());
  EXPECT_EQ(find_circuit(b, star), star);
  const auto c = find_circuit(b, EdgeSet(b.ground(), b.full()));
  EXPECT_LE(c.size(), 17u);
  EXPECT_EQ(b.rank(c), static_cast<int>(c.size()) - 1);
  for (std::size_t id : c.ids()) EXPECT_TRUE(is_independent(b, c.without(id)));
}

TEST(CircuitTest, BudgetIsExplicit) {
  const auto u = uniform_matroid(GroundSet::grid(4, 8), 3);
  EXPECT_THROW(enumerate_circuits(u, 4), BudgetExceeded);
  EXPECT_THROW(enumerate_circuits(u, 6, EdgeSet(u.ground(), low_bits(26)), 1000), BudgetExceeded);
}

TEST(EqualityTest, SelfAndCharacteristicTwoTensor) {
  const auto t = tensor(4, 4, 2, 2);
  EXPECT_TRUE(matroids_equal(t, t, Exhaustive{}).equal);
  EXPECT_TRUE(matroids_equal(tensor(4, 4, 2, 2, 2), t, Exhaustive{}).equal);
  EXPECT_THROW(matroids_equal(t, tensor(3, 3, 2, 2), Exhaustive{}), InvalidArgument);
}

TEST(EqualityTest, SymmetricPowerDependsOnCharacteristic) {
  const auto s2 = generic::mc_oracle(generic::GenericKind::SymPower, generic::PowerConfig{4, 2, 2, std::nullopt, 5, 1});
  const auto s0 = generic::mc_oracle(generic::GenericKind::SymPower, generic::PowerConfig{4, 2, 0, std::nullopt, 5, 1});
  const auto rep = matroids_equal(s2, s0, Exhaustive{});
  ASSERT_FALSE(rep.equal);
  ASSERT_TRUE(rep.witness);
  EXPECT_LT(rep.rank_a, rep.rank_b);
  const auto sampled = matroids_equal(s2, s0, Sampled{2000, 3});
  EXPECT_FALSE(sampled.equal);
}

TEST(PropertyTest, RankAxiomsOnConstructedOracles) {
  Rng rng(5);
  for (const auto& m : {tensor(3, 4, 2, 2), dual(bipartite(3, 4, 2, 1)), uniform_matroid(GroundSet::pairs(5), 4)}) {
    const auto rep = check_rank_axioms(m, 300, rng);
    EXPECT_TRUE(rep.ok()) << m.name() << ": " << rep.first_failure;
  }
}
