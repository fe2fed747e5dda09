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

#ifndef RIGIDMAT_COMBI_ROW_FAMILY_HPP
#define RIGIDMAT_COMBI_ROW_FAMILY_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "rigidmat/errors.hpp"
#include "rigidmat/matroid/ground_set.hpp"

namespace rigidmat::combi {

/// Column subset of [n], n <= 64.
using ColMask = std::uint64_t;

inline int card(ColMask x) { return std::popcount(x); }

/// E = union over rows i of {i} x A_i, with A_i stored as a column mask.
struct RowFamily {
  int m = 0;
  int n = 0;
  std::vector<ColMask> sets;

  RowFamily() = default;
  RowFamily(int m_, int n_, std::vector<ColMask> sets_) : m(m_), n(n_), sets(std::move(sets_)) {
    require(m >= 0 && n >= 0 && n <= 64, "RowFamily: need 0 <= n <= 64");
    require(sets.size() == static_cast<std::size_t>(m), "RowFamily: need exactly m sets");
    for (auto s : sets) require((s & ~matroid::low_bits(static_cast<std::size_t>(n))) == 0, "RowFamily: column out of range");
  }

  /// 0-based columns for each row.
  static RowFamily from_lists(int m, int n, const std::vector<std::vector<int>>& lists) {
    require(lists.size() == static_cast<std::size_t>(m), "RowFamily::from_lists: need exactly m lists");
    std::vector<ColMask> sets;
    for (const auto& l : lists) {
      ColMask s = 0;
      for (int j : l) {
        require(j >= 0 && j < n, "RowFamily::from_lists: column out of range");
        s |= ColMask{1} << j;
      }
      sets.push_back(s);
    }
    return RowFamily(m, n, std::move(sets));
  }

  /// Grid mask (row-major id i*n + j) to row family.
  static RowFamily from_grid_mask(matroid::Mask e, int m, int n) {
    require(m * n <= 64, "RowFamily: grid larger than 64 cells");
    require((e & ~matroid::low_bits(static_cast<std::size_t>(m * n))) == 0, "RowFamily: cell outside the grid");
    std::vector<ColMask> sets(static_cast<std::size_t>(m));
    const ColMask row = matroid::low_bits(static_cast<std::size_t>(n));
    for (int i = 0; i < m; ++i) sets[static_cast<std::size_t>(i)] = (e >> (i * n)) & row;
    return RowFamily(m, n, std::move(sets));
  }

  static RowFamily from_edge_set(const matroid::EdgeSet& e, int m, int n) {
    require(e.ground()->size() == static_cast<std::size_t>(m * n), "RowFamily: edge set is not over an m x n grid");
    return from_grid_mask(e.mask(), m, n);
  }

  matroid::Mask to_grid_mask() const {
    matroid::Mask out = 0;
    for (int i = 0; i < m; ++i) out |= static_cast<matroid::Mask>(sets[static_cast<std::size_t>(i)]) << (i * n);
    return out;
  }

  /// The same pattern with rows and columns exchanged.
  RowFamily transposed() const {
    std::vector<ColMask> t(static_cast<std::size_t>(n));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j)
        if (sets[static_cast<std::size_t>(i)] >> j & 1) t[static_cast<std::size_t>(j)] |= ColMask{1} << i;
    return RowFamily(n, m, std::move(t));
  }

  int size() const {
    int s = 0;
    for (auto a : sets) s += card(a);
    return s;
  }

  const ColMask& operator[](int i) const { return sets[static_cast<std::size_t>(i)]; }
};

/// Columns appearing in exactly 1, 2, 3 of the A_i.
struct MultiplicityClasses {
  ColMask s1 = 0;
  ColMask s2 = 0;
  ColMask s3 = 0;

  static MultiplicityClasses of(const RowFamily& f) {
    // Saturating per-column counters held as bit planes.
    ColMask once = 0, twice = 0, thrice = 0, more = 0;
    for (auto a : f.sets) {
      const ColMask zero = ~(once | twice | thrice | more);
      more |= thrice & a;
      thrice = (thrice & ~a) | (twice & a);
      twice = (twice & ~a) | (once & a);
      once = (once & ~a) | (zero & a);
    }
    return {once & ~more, twice & ~more, thrice & ~more};
  }
};

/// S x T, as 0-based row and column lists.
struct Rectangle {
  std::vector<int> rows;
  std::vector<int> cols;

  std::string to_string() const {
    auto list = [](const std::vector<int>& v) {
      std::string s = "{";
      for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i] + 1);
      return s + "}";
    };
    return list(rows) + " x " + list(cols);
  }
};

}  // namespace rigidmat::combi

#endif  // RIGIDMAT_COMBI_ROW_FAMILY_HPP
