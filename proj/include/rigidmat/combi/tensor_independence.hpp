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

#ifndef RIGIDMAT_COMBI_TENSOR_INDEPENDENCE_HPP
#define RIGIDMAT_COMBI_TENSOR_INDEPENDENCE_HPP

#include <algorithm>
#include <string>

#include "rigidmat/combi/row_family.hpp"
#include "rigidmat/errors.hpp"

namespace rigidmat::combi {

// Independence of E = U {i} x A_i in the tensor matroid T_{m,n}(s, r, p).
// Every test below is characteristic free.

namespace detail {

inline bool rows_fit(const RowFamily& f, int r) {
  return std::all_of(f.sets.begin(), f.sets.end(), [r](ColMask a) { return card(a) <= r; });
}

inline bool pairwise_disjoint(const RowFamily& f) {
  ColMask seen = 0;
  for (auto a : f.sets) {
    if (seen & a) return false;
    seen |= a;
  }
  return true;
}

}  // namespace detail

/// Disjoint A_i: independent iff every |A_i| <= r and sum |A_i| <= s r.
inline bool disjoint_independent(const RowFamily& f, int s, int r) {
  require(detail::pairwise_disjoint(f), "disjoint_independent: the sets A_i are not pairwise disjoint");
  return detail::rows_fit(f, r) && f.size() <= s * r;
}

/// s = 1: pairwise disjoint and sum |A_i| <= r.
inline bool s1_independent(const RowFamily& f, int r) {
  return detail::pairwise_disjoint(f) && f.size() <= r;
}

/// s = 2. A row with more than r cells is dependent outright.
inline bool s2_independent(const RowFamily& f, int r) {
  if (!detail::rows_fit(f, r)) return false;
  const int m = f.m;
  // No column in three rows.
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const ColMask ij = f[i] & f[j];
      if (!ij) continue;
      for (int k = j + 1; k < m; ++k)
        if (ij & f[k]) return false;
    }
  int pair_sum = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) pair_sum += card(f[i] & f[j]);
  for (int k = 0; k < m; ++k) {
    ColMask others = 0;
    for (int i = 0; i < m; ++i)
      if (i != k) others |= f[i];
    if (pair_sum + card(f[k] & ~others) > r) return false;
  }
  return f.size() <= 2 * r;
}

/// s = 3. A row with more than r cells is dependent outright.
inline bool s3_independent(const RowFamily& f, int r) {
  if (!detail::rows_fit(f, r)) return false;
  const int m = f.m;
  const auto cls = MultiplicityClasses::of(f);
  const ColMask s3 = cls.s3;
  const int n3 = card(s3);

  // No column in four rows.
  ColMask any = 0;
  for (auto a : f.sets) any |= a;
  if (any & ~(cls.s1 | cls.s2 | cls.s3)) return false;

  for (int i = 0; i < m; ++i)
    if (card(f[i] & ~s3) + n3 > r) return false;

  // Over every split of four distinct rows into two pairs.
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k)
        for (int l = k + 1; l < m; ++l) {
          auto pair = [&](int x, int y) { return card((f[x] & f[y]) & ~s3); };
          if (pair(i, j) + pair(k, l) + n3 > r) return false;
          if (pair(i, k) + pair(j, l) + n3 > r) return false;
          if (pair(i, l) + pair(j, k) + n3 > r) return false;
        }

  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const int lhs = card(f[i] & ~s3) + card(f[j] & ~s3) + card(cls.s2 & ~(s3 | f[i] | f[j])) + 2 * n3;
      if (lhs > 2 * r) return false;
    }

  return card(cls.s1) + 2 * card(cls.s2) + 3 * n3 <= 3 * r;
}

/// Inequality families of the s = 3 test that fail, for reporting.
struct S3Violations {
  bool four_fold = false;
  bool single_row = false;
  bool two_pairs = false;
  bool two_rows = false;
  bool global = false;

  bool any() const { return four_fold || single_row || two_pairs || two_rows || global; }
};

inline S3Violations s3_violations(const RowFamily& f, int r) {
  S3Violations v;
  const int m = f.m;
  const auto cls = MultiplicityClasses::of(f);
  const ColMask s3 = cls.s3;
  const int n3 = card(s3);
  ColMask any = 0;
  for (auto a : f.sets) any |= a;
  v.four_fold = (any & ~(cls.s1 | cls.s2 | cls.s3)) != 0;
  for (int i = 0; i < m; ++i) v.single_row = v.single_row || card(f[i] & ~s3) + n3 > r;
  auto pair = [&](int x, int y) { return card((f[x] & f[y]) & ~s3); };
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k)
        for (int l = k + 1; l < m; ++l)
          v.two_pairs = v.two_pairs || pair(i, j) + pair(k, l) + n3 > r || pair(i, k) + pair(j, l) + n3 > r ||
                        pair(i, l) + pair(j, k) + n3 > r;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      v.two_rows = v.two_rows || card(f[i] & ~s3) + card(f[j] & ~s3) + card(cls.s2 & ~(s3 | f[i] | f[j])) + 2 * n3 > 2 * r;
  v.global = card(cls.s1) + 2 * card(cls.s2) + 3 * n3 > 3 * r;
  return v;
}

/// Deterministic independence in T_{m,n}(s, r, p) for min(s, r) <= 3; the
/// r-side cases run the s-side test on the transposed pattern.
inline bool tensor_independent_det(const RowFamily& e, int s, int r) {
  require(s >= 0 && s <= e.m && r >= 0 && r <= e.n, "tensor_independent_det: need 0 <= s <= m and 0 <= r <= n");
  if (s == 0 || r == 0) return e.size() == 0;
  if (s <= 3) {
    switch (s) {
      case 1:
        return s1_independent(e, r);
      case 2:
        return s2_independent(e, r);
      default:
        return s3_independent(e, r);
    }
  }
  if (r <= 3) return tensor_independent_det(e.transposed(), r, s);
  throw Unsupported("tensor_independent_det: no deterministic test for min(s, r) = " +
                    std::to_string(std::min(s, r)) + " > 3; use the Monte Carlo oracle");
}

inline bool tensor_independent_det(matroid::Mask e, int m, int n, int s, int r) {
  return tensor_independent_det(RowFamily::from_grid_mask(e, m, n), s, r);
}

}  // namespace rigidmat::combi

#endif  // RIGIDMAT_COMBI_TENSOR_INDEPENDENCE_HPP
