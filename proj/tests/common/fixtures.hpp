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

// Shared grid patterns for tests, written with 1-based rows and columns.

#ifndef RIGIDMAT_TESTS_FIXTURES_HPP
#define RIGIDMAT_TESTS_FIXTURES_HPP

#include <initializer_list>
#include <utility>

#include "rigidmat/certs/orientation.hpp"
#include "rigidmat/matroid/ground_set.hpp"

namespace rigidmat::fixtures {

inline matroid::Mask cells(int n, std::initializer_list<std::pair<int, int>> list) {
  matroid::Mask x = 0;
  for (auto [i, j] : list) x |= matroid::Mask{1} << ((i - 1) * n + (j - 1));
  return x;
}

inline matroid::Mask block(int n, std::initializer_list<int> rows, std::initializer_list<int> cols) {
  matroid::Mask x = 0;
  for (int i : rows)
    for (int j : cols) x |= matroid::Mask{1} << ((i - 1) * n + (j - 1));
  return x;
}

/// 5 x 5 star: a circuit of B_{5,5}(2,2) with no Laman witness.
inline matroid::Mask star_5x5() {
  return block(5, {1, 2}, {3, 4, 5}) | block(5, {3}, {1, 2, 4, 5}) | block(5, {4, 5}, {1, 2, 3});
}

/// 5 x 5 diamond: a circuit of T_{5,5}(3,3,p).
inline matroid::Mask diamond_5x5() { return block(5, {1, 2}, {1, 2}) | block(5, {4, 5}, {4, 5}); }

/// 5 x 9 diamond with A = [{1,2,3},{4,5,6},{8,9},{7,9},{7,8}].
inline matroid::Mask diamond_5x9() {
  return block(9, {1}, {1, 2, 3}) | block(9, {2}, {4, 5, 6}) | block(9, {3}, {8, 9}) | block(9, {4}, {7, 9}) |
         block(9, {5}, {7, 8});
}

/// 5 x 9 star: rows {3,4,5} by columns 1..6.
inline matroid::Mask star_5x9() { return block(9, {3, 4, 5}, {1, 2, 3, 4, 5, 6}); }

/// 7 x 7 pattern ({1,2,3}^2 minus (3,3)) with {4,5}^2 and {6,7}^2.
inline matroid::Mask blocks_7x7() {
  return (block(7, {1, 2, 3}, {1, 2, 3}) & ~cells(7, {{3, 3}})) | block(7, {4, 5}, {4, 5}) | block(7, {6, 7}, {6, 7});
}

/// 3 x 3 orientation with neither directed nor alternating cycles.
inline certs::Orientation orientation_3x3() {
  using certs::Dir;
  const Dir lr = Dir::LeftToRight, rl = Dir::RightToLeft;
  return certs::Orientation::from_arcs(3, 3,
                                       {{0, 0, lr}, {0, 1, rl}, {0, 2, lr}, {1, 0, rl}, {1, 1, rl}, {1, 2, lr},
                                        {2, 0, lr}, {2, 1, rl}});
}

}  // namespace rigidmat::fixtures

#endif  // RIGIDMAT_TESTS_FIXTURES_HPP
