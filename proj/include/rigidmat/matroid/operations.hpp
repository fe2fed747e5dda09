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

#ifndef RIGIDMAT_MATROID_OPERATIONS_HPP
#define RIGIDMAT_MATROID_OPERATIONS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rigidmat/errors.hpp"
#include "rigidmat/exactalg/matrix.hpp"
#include "rigidmat/exactalg/rank.hpp"
#include "rigidmat/exactalg/rank_table.hpp"
#include "rigidmat/matroid/oracle.hpp"
#include "rigidmat/rng.hpp"

namespace rigidmat::matroid {

/// Largest ground set compared subset by subset.
inline constexpr std::size_t kMaxExhaustiveGround = 22;
/// Largest restriction that enumerate_circuits will search.
inline constexpr std::size_t kMaxCircuitSearch = 30;

inline bool is_independent(const MatroidOracle& m, const EdgeSet& s) { return m.rank(s) == s.size(); }
inline bool is_independent(const MatroidOracle& m, Mask s) { return m.rank(s) == popcount(s); }

/// Column matroid of a fixed matrix; column c is ground element c.
inline MatroidOracle column_matroid(GroundPtr ground, exactalg::Matrix matrix, std::string name) {
  require(exactalg::cols(matrix) == ground->size(), "column_matroid: column count must equal the ground size");
  auto shared = std::make_shared<const exactalg::Matrix>(std::move(matrix));
  auto rank_fn = [shared](Mask x) {
    const auto cols = exactalg::mask_bits(x);
    return static_cast<int>(exactalg::mat_rank_of_columns(*shared, cols));
  };
  auto table_fn = [shared](Mask base, Mask support) { return exactalg::column_rank_table(*shared, base, support); };
  return MatroidOracle(std::move(ground), rank_fn, table_fn, Certainty::deterministic(), std::move(name));
}

/// Uniform matroid U_{r,n} on a given ground set.
inline MatroidOracle uniform_matroid(GroundPtr ground, int r) {
  require(r >= 0, "uniform_matroid: negative rank");
  auto rank_fn = [r](Mask x) { return std::min(r, popcount(x)); };
  return MatroidOracle(std::move(ground), rank_fn, nullptr, Certainty::deterministic(),
                       "U(" + std::to_string(r) + ")");
}

/// rank*(F) = |F| - rank(E) + rank(E \ F).
inline MatroidOracle dual(const MatroidOracle& m) {
  const int total = m.total_rank();
  const Mask full = m.full();
  auto rank_fn = [m, total, full](Mask x) { return popcount(x) - total + m.rank(full & ~x); };
  auto table_fn = [m, total, full](Mask base, Mask support) {
    const auto inner = m.table(full & ~base & ~support, support);
    const std::uint64_t all = inner.size() - 1;
    const int b = popcount(base);
    std::vector<std::uint8_t> out(inner.size());
    for (std::uint64_t x = 0; x < out.size(); ++x)
      out[x] = static_cast<std::uint8_t>(b + std::popcount(x) - total + inner[all & ~x]);
    return out;
  };
  return MatroidOracle(m.ground(), rank_fn, table_fn, m.certainty().scaled(2), "dual(" + m.name() + ")");
}

/// M / contract \ delete, on the remaining elements in their original order.
inline MatroidOracle minor(const MatroidOracle& m, const EdgeSet& contract, const EdgeSet& del) {
  require(same_ground(contract.ground(), m.ground()) && same_ground(del.ground(), m.ground()),
          "minor: edge sets are over a different ground set");
  require((contract.mask() & del.mask()) == 0, "minor: contract and delete sets overlap");
  const Mask c = contract.mask();
  const Mask removed = c | del.mask();
  std::vector<Label> labels;
  std::vector<std::size_t> keep;
  for (std::size_t id = 0; id < m.size(); ++id) {
    if (removed >> id & 1) continue;
    labels.push_back(m.ground()->label(id));
    keep.push_back(id);
  }
  auto ground = std::make_shared<const GroundSet>(std::move(labels));
  const int rc = m.rank(c);
  auto lift = [keep](Mask x) { return MatroidOracle::expand(x, keep); };
  auto rank_fn = [m, c, rc, lift](Mask x) { return m.rank(lift(x) | c) - rc; };
  auto table_fn = [m, c, rc, lift](Mask base, Mask support) {
    auto t = m.table(lift(base) | c, lift(support));
    for (auto& v : t) v = static_cast<std::uint8_t>(v - rc);
    return t;
  };
  const int queries = c ? 2 : 1;
  return MatroidOracle(ground, rank_fn, table_fn, m.certainty().scaled(queries),
                       "minor(" + m.name() + ")");
}

inline MatroidOracle restriction(const MatroidOracle& m, const EdgeSet& keep) {
  return minor(m, EdgeSet(m.ground()), keep.complement());
}

/// Greedily drops elements while the set stays dependent; the result is a
/// circuit inside `dependent`.
inline EdgeSet find_circuit(const MatroidOracle& m, const EdgeSet& dependent) {
  require(same_ground(dependent.ground(), m.ground()), "find_circuit: edge set is over a different ground set");
  require(!is_independent(m, dependent), "find_circuit: input set is independent");
  Mask d = dependent.mask();
  for (std::size_t id : dependent.ids()) {
    const Mask smaller = d & ~(Mask{1} << id);
    if (!is_independent(m, smaller)) d = smaller;
  }
  return EdgeSet(m.ground(), d);
}

/// Every circuit of size <= max_size inside `within` (the whole ground set
/// when omitted). Each reported set is checked minimal dependent.
inline std::vector<EdgeSet> enumerate_circuits(const MatroidOracle& m, int max_size,
                                               std::optional<EdgeSet> within = std::nullopt,
                                               std::uint64_t budget = std::uint64_t{1} << 24) {
  const Mask region = within ? within->mask() : m.full();
  if (within) require(same_ground(within->ground(), m.ground()), "enumerate_circuits: restriction over a different ground set");
  const auto k = static_cast<std::size_t>(popcount(region));
  if (k > kMaxCircuitSearch) {
    throw BudgetExceeded("enumerate_circuits: " + std::to_string(k) + " elements exceeds the exhaustive cap of " +
                         std::to_string(kMaxCircuitSearch) + "; supply a smaller restriction");
  }
  const auto bits = MatroidOracle::bit_list(region);
  std::vector<EdgeSet> out;
  if (k <= kMaxExhaustiveGround) {
    const auto t = m.table(0, region);
    for (std::uint64_t x = 1; x < t.size(); ++x) {
      const int size = std::popcount(x);
      if (size > max_size || t[x] != size - 1) continue;
      bool minimal = true;
      for (std::uint64_t y = x; y && minimal; y &= y - 1) minimal = t[x & ~(y & (~y + 1))] == size - 1;
      if (minimal) out.emplace_back(m.ground(), MatroidOracle::expand(x, bits));
    }
  } else {
    // Subsets of size <= max_size in increasing size, counted against the budget.
    std::uint64_t visited = 0;
    for (int size = 1; size <= std::min<int>(max_size, static_cast<int>(k)); ++size) {
      std::vector<int> pick(static_cast<std::size_t>(size));
      for (int i = 0; i < size; ++i) pick[static_cast<std::size_t>(i)] = i;
      while (true) {
        if (++visited > budget)
          throw BudgetExceeded("enumerate_circuits: more than " + std::to_string(budget) + " candidate subsets");
        Mask x = 0;
        for (int p : pick) x |= Mask{1} << bits[static_cast<std::size_t>(p)];
        if (m.rank(x) == size - 1) {
          bool minimal = true;
          for (Mask y = x; y && minimal; y &= y - 1) minimal = m.rank(x & ~(y & (~y + 1))) == size - 1;
          if (minimal) out.emplace_back(m.ground(), x);
        }
        int i = size - 1;
        while (i >= 0 && pick[static_cast<std::size_t>(i)] == static_cast<int>(k) - size + i) --i;
        if (i < 0) break;
        ++pick[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < size; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  return out;
}

struct Exhaustive {};
struct Sampled {
  std::uint64_t trials = 10000;
  std::uint64_t seed = 1;
};
using EqualityMode = std::variant<Exhaustive, Sampled>;

struct EqualityReport {
  bool equal = true;
  std::optional<Mask> witness;
  /// Ranks at the witness.
  int rank_a = 0;
  int rank_b = 0;
  std::uint64_t subsets_checked = 0;
  Certainty certainty;
};

/// Compares rank functions element id by element id.
inline EqualityReport matroids_equal(const MatroidOracle& a, const MatroidOracle& b, const EqualityMode& mode) {
  require(a.size() == b.size(), "matroids_equal: ground sets differ in size (" + std::to_string(a.size()) + " vs " +
                                    std::to_string(b.size()) + ")");
  EqualityReport rep;
  rep.certainty = combine(a.certainty(), b.certainty());
  auto check = [&](Mask x, int ra, int rb) {
    ++rep.subsets_checked;
    if (ra == rb || !rep.equal) return;
    rep.equal = false;
    rep.witness = x;
    rep.rank_a = ra;
    rep.rank_b = rb;
  };
  if (std::holds_alternative<Exhaustive>(mode)) {
    if (a.size() > kMaxExhaustiveGround) {
      throw BudgetExceeded("matroids_equal: exhaustive comparison needs at most " +
                           std::to_string(kMaxExhaustiveGround) + " elements, got " + std::to_string(a.size()));
    }
    const auto ta = a.table(0, a.full());
    const auto tb = b.table(0, b.full());
    for (std::uint64_t x = 0; x < ta.size() && rep.equal; ++x) check(x, ta[x], tb[x]);
    return rep;
  }
  const auto& s = std::get<Sampled>(mode);
  const auto n = static_cast<int>(a.size());
  // All subsets of size <= 4.
  std::vector<Mask> small{0};
  for (int i = 0; i < n; ++i) {
    const Mask bi = Mask{1} << i;
    small.push_back(bi);
    for (int j = i + 1; j < n; ++j) {
      const Mask bj = bi | Mask{1} << j;
      small.push_back(bj);
      for (int k = j + 1; k < n; ++k) {
        const Mask bk = bj | Mask{1} << k;
        small.push_back(bk);
        for (int l = k + 1; l < n; ++l) small.push_back(bk | Mask{1} << l);
      }
    }
  }
  for (Mask x : small) {
    check(x, a.rank(x), b.rank(x));
    if (!rep.equal) return rep;
  }
  // Random subsets with a uniformly drawn size, so sizes near the rank are
  // probed as often as the middle layer.
  Rng rng(s.seed);
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (std::uint64_t t = 0; t < s.trials && rep.equal; ++t) {
    const auto size = static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n) + 1));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    Mask x = 0;
    for (int i = 0; i < size; ++i) {
      const auto j = i + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(n - i)));
      std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]);
      x |= Mask{1} << perm[static_cast<std::size_t>(i)];
    }
    check(x, a.rank(x), b.rank(x));
  }
  return rep;
}

}  // namespace rigidmat::matroid

#endif  // RIGIDMAT_MATROID_OPERATIONS_HPP
