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

#ifndef RIGIDMAT_COMBI_BIPARTITE_HPP
#define RIGIDMAT_COMBI_BIPARTITE_HPP

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "rigidmat/combi/row_family.hpp"
#include "rigidmat/combi/tensor_independence.hpp"
#include "rigidmat/matroid/oracle.hpp"

namespace rigidmat::combi {

inline constexpr int kMaxLamanRows = 24;

inline void check_bipartite_params(int m, int n, int a, int b) {
  require(m >= 0 && n >= 0 && m * n <= 64, "bipartite parameters: need an m x n grid with at most 64 cells");
  require(a >= 0 && a <= m && b >= 0 && b <= n, "bipartite parameters: need 0 <= a <= m and 0 <= b <= n");
}

/// A rectangle S x T with |S| >= a, |T| >= b and |E cap S x T| > |S| b + |T| a - a b,
/// if one exists. For fixed S and |T| = t the densest T is the t columns
/// with the most cells in rows S (ties to the lower column), so scanning S
/// and t is exhaustive.
inline std::optional<Rectangle> laman_violation(const RowFamily& e, int a, int b) {
  const int m = e.m, n = e.n;
  check_bipartite_params(m, n, a, b);
  if (m > kMaxLamanRows) {
    throw BudgetExceeded("laman_violation: " + std::to_string(m) + " rows exceeds the enumeration cap of " +
                         std::to_string(kMaxLamanRows));
  }
  std::vector<int> counts(static_cast<std::size_t>(n));
  std::vector<int> order(static_cast<std::size_t>(n));
  for (std::uint32_t srows = 0; srows < (std::uint32_t{1} << m); ++srows) {
    const int ssize = std::popcount(srows);
    if (ssize < a || ssize == 0) continue;
    std::fill(counts.begin(), counts.end(), 0);
    for (int i = 0; i < m; ++i)
      if (srows >> i & 1)
        for (int j = 0; j < n; ++j) counts[static_cast<std::size_t>(j)] += static_cast<int>(e[i] >> j & 1);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return counts[static_cast<std::size_t>(x)] > counts[static_cast<std::size_t>(y)]; });
    int sum = 0;
    for (int t = 1; t <= n; ++t) {
      sum += counts[static_cast<std::size_t>(order[static_cast<std::size_t>(t - 1)])];
      if (t < b) continue;
      if (sum > ssize * b + t * a - a * b) {
        Rectangle rect;
        for (int i = 0; i < m; ++i)
          if (srows >> i & 1) rect.rows.push_back(i);
        rect.cols.assign(order.begin(), order.begin() + t);
        std::sort(rect.cols.begin(), rect.cols.end());
        return rect;
      }
    }
  }
  return std::nullopt;
}

inline std::optional<Rectangle> laman_violation(matroid::Mask e, int m, int n, int a, int b) {
  return laman_violation(RowFamily::from_grid_mask(e, m, n), a, b);
}

/// |E cap S x T| for a rectangle, and its Laman bound.
inline int rectangle_count(const RowFamily& e, const Rectangle& rect) {
  int c = 0;
  for (int i : rect.rows)
    for (int j : rect.cols) c += static_cast<int>(e[i] >> j & 1);
  return c;
}
inline int laman_bound(const Rectangle& rect, int a, int b) {
  return static_cast<int>(rect.rows.size()) * b + static_cast<int>(rect.cols.size()) * a - a * b;
}

/// Rank in T_{m,n}(s, r, p) by greedy insertion in row-major order.
inline int tensor_rank_det(matroid::Mask e, int m, int n, int s, int r) {
  matroid::Mask basis = 0;
  int rank = 0;
  for (matroid::Mask x = e; x; x &= x - 1) {
    const matroid::Mask bit = x & (~x + 1);
    if (tensor_independent_det(basis | bit, m, n, s, r)) {
      basis |= bit;
      ++rank;
    }
  }
  return rank;
}

/// Rank in B_{m,n}(a, b) through the duality with T_{m,n}(m-a, n-b, .):
/// rank_B(F) = |F| - (m-a)(n-b) + rank_T(complement of F).
inline int rank_bipartite_fast(matroid::Mask f, int m, int n, int a, int b) {
  check_bipartite_params(m, n, a, b);
  const int s = m - a, r = n - b;
  if (std::min(s, r) > 3) {
    throw Unsupported("rank_bipartite_fast: needs min(m - a, n - b) <= 3, got " + std::to_string(std::min(s, r)));
  }
  const matroid::Mask full = matroid::low_bits(static_cast<std::size_t>(m * n));
  require((f & ~full) == 0, "rank_bipartite_fast: cell outside the grid");
  return matroid::popcount(f) - s * r + tensor_rank_det(full & ~f, m, n, s, r);
}

/// Cell (i, j) of an m x n grid moved to (j, i) of the n x m grid.
inline matroid::Mask transpose_cells(matroid::Mask e, int m, int n) {
  return RowFamily::from_grid_mask(e, m, n).transposed().to_grid_mask();
}

/// G plus a new last row joined to every column, on the (m+1) x n grid.
inline matroid::Mask cone_left(matroid::Mask e, int m, int n) {
  require((m + 1) * n <= 64, "cone_left: grid larger than 64 cells");
  return e | (matroid::low_bits(static_cast<std::size_t>(n)) << (m * n));
}

/// G plus a new last column joined to every row, on the m x (n+1) grid.
inline matroid::Mask cone_right(matroid::Mask e, int m, int n) {
  require(m * (n + 1) <= 64, "cone_right: grid larger than 64 cells");
  auto f = RowFamily::from_grid_mask(e, m, n);
  std::vector<ColMask> sets;
  for (auto a : f.sets) sets.push_back(a | (ColMask{1} << n));
  return RowFamily(m, n + 1, std::move(sets)).to_grid_mask();
}

/// Every circuit of B_{m,n}(a, b) is a Laman circuit iff a <= 1, b <= 1,
/// m - a <= 2 or n - b <= 2.
inline bool all_circuits_laman(int m, int n, int a, int b) {
  check_bipartite_params(m, n, a, b);
  return a <= 1 || b <= 1 || m - a <= 2 || n - b <= 2;
}

/// B_{m,n}(a, b) as a deterministic oracle (min(m - a, n - b) <= 3).
inline matroid::MatroidOracle bipartite_det_oracle(int m, int n, int a, int b) {
  check_bipartite_params(m, n, a, b);
  if (std::min(m - a, n - b) > 3) throw Unsupported("bipartite_det_oracle: needs min(m - a, n - b) <= 3");
  auto rank_fn = [m, n, a, b](matroid::Mask x) { return rank_bipartite_fast(x, m, n, a, b); };
  return matroid::MatroidOracle(matroid::GroundSet::grid(m, n), rank_fn, nullptr, matroid::Certainty::deterministic(),
                                "B_{" + std::to_string(m) + "," + std::to_string(n) + "}(" + std::to_string(a) + "," +
                                    std::to_string(b) + ")[combinatorial]");
}

/// T_{m,n}(s, r, p) as a deterministic oracle (min(s, r) <= 3).
inline matroid::MatroidOracle tensor_det_oracle(int m, int n, int s, int r) {
  require(m * n <= 64, "tensor_det_oracle: grid larger than 64 cells");
  require(s >= 0 && s <= m && r >= 0 && r <= n, "tensor_det_oracle: need 0 <= s <= m and 0 <= r <= n");
  if (std::min(s, r) > 3) throw Unsupported("tensor_det_oracle: needs min(s, r) <= 3");
  auto rank_fn = [m, n, s, r](matroid::Mask x) { return tensor_rank_det(x, m, n, s, r); };
  return matroid::MatroidOracle(matroid::GroundSet::grid(m, n), rank_fn, nullptr, matroid::Certainty::deterministic(),
                                "T_{" + std::to_string(m) + "," + std::to_string(n) + "}(" + std::to_string(s) + "," +
                                    std::to_string(r) + ")[combinatorial]");
}

}  // namespace rigidmat::combi

#endif  // RIGIDMAT_COMBI_BIPARTITE_HPP
