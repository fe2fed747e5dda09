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

// Generated by tools/gen_irreducible.cpp. Do not edit by hand.

#ifndef RIGIDMAT_EXACTALG_IRREDUCIBLE_TABLE_HPP
#define RIGIDMAT_EXACTALG_IRREDUCIBLE_TABLE_HPP

#include <array>
#include <cstdint>

namespace rigidmat::exactalg {

struct IrreducibleEntry {
  std::uint32_t p;
  int k;
  // Monic modulus, lowest degree first; coefficients beyond k are zero.
  std::array<std::uint8_t, 33> coeffs;
};

inline constexpr IrreducibleEntry kIrreducibleTable[] = {
    {2, 1, {0, 1}},
    {2, 2, {1, 1, 1}},
    {2, 3, {1, 0, 1, 1}},
    {2, 4, {1, 1, 1, 1, 1}},
    {2, 5, {1, 1, 0, 1, 1, 1}},
    {2, 6, {1, 0, 0, 0, 0, 1, 1}},
    {2, 7, {1, 0, 0, 0, 0, 0, 1, 1}},
    {2, 8, {1, 1, 0, 0, 0, 0, 1, 1, 1}},
    {2, 9, {1, 1, 0, 1, 1, 1, 0, 0, 1, 1}},
    {2, 10, {1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 1}},
    {2, 11, {1, 1, 0, 0, 1, 0, 1, 1, 0, 0, 1, 1}},
    {2, 12, {1, 1, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 1}},
    {2, 13, {1, 0, 0, 0, 1, 1, 1, 0, 1, 1, 0, 1, 1, 1}},
    {2, 14, {1, 1, 0, 0, 0, 1, 0, 1, 0, 1, 1, 0, 0, 0, 1}},
    {2, 15, {1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1}},
    {2, 16, {1, 0, 0, 1, 1, 1, 0, 0, 1, 0, 1, 1, 1, 0, 1, 1, 1}},
    {2, 17, {1, 1, 0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 1, 0, 0, 0, 1, 1}},
    {2, 18, {1, 0, 1, 0, 1, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1}},
    {2, 19, {1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 1, 1, 0, 1, 1}},
    {2, 20, {1, 1, 1, 1, 1, 0, 1, 0, 1, 1, 1, 1, 0, 0, 0, 1, 1, 1, 1, 0, 1}},
    {2, 21, {1, 0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 1}},
    {2, 22, {1, 1, 1, 0, 1, 1, 1, 1, 0, 1, 1, 0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 1, 1}},
    {2, 23, {1, 0, 1, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 1}},
    {2, 24, {1, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 0, 0, 1, 1}},
    {2, 25, {1, 1, 1, 1, 1, 0, 1, 1, 1, 0, 1, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1, 1, 0, 0, 1, 1}},
    {2, 26, {1, 0, 1, 0, 0, 1, 1, 0, 1, 0, 0, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 1, 1}},
    {2, 27, {1, 0, 0, 1, 1, 0, 1, 0, 0, 1, 1, 1, 0, 0, 1, 1, 0, 1, 0, 0, 0, 1, 0, 0, 1, 1, 1, 1}},
    {2, 28, {1, 1, 1, 0, 0, 0, 1, 1, 1, 0, 1, 1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 0, 1, 1, 1, 1, 1, 0, 1}},
    {2, 29, {1, 1, 0, 0, 0, 1, 0, 1, 1, 0, 1, 1, 0, 0, 1, 0, 0, 0, 1, 0, 1, 1, 0, 0, 1, 1, 1, 0, 0, 1}},
    {2, 30, {1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 1, 1, 0, 1, 0, 1, 1, 0, 1, 0, 1, 1, 0, 1, 0, 0, 0, 1, 1, 1}},
    {2, 31, {1, 1, 0, 0, 1, 1, 0, 0, 0, 1, 1, 1, 1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1, 0, 1, 1, 1, 1, 1, 1}},
    {2, 32, {1, 1, 0, 1, 0, 1, 1, 0, 0, 1, 0, 0, 1, 0, 0, 1, 0, 1, 1, 1, 1, 0, 1, 0, 1, 0, 1, 0, 1, 1, 0, 1, 1}},
    {3, 1, {1, 1}},
    {3, 2, {2, 1, 1}},
    {3, 3, {2, 2, 2, 1}},
    {3, 4, {1, 1, 1, 1, 1}},
    {3, 5, {2, 2, 2, 1, 2, 1}},
    {3, 6, {1, 0, 0, 2, 2, 1, 1}},
    {3, 7, {1, 0, 0, 1, 1, 2, 1, 1}},
    {3, 8, {2, 1, 2, 0, 0, 0, 1, 0, 1}},
    {3, 9, {1, 0, 1, 0, 2, 1, 1, 1, 2, 1}},
    {3, 10, {1, 0, 1, 2, 2, 1, 1, 2, 1, 1, 1}},
    {3, 11, {1, 2, 2, 0, 0, 1, 2, 1, 2, 1, 1, 1}},
    {3, 12, {2, 0, 2, 1, 1, 2, 0, 1, 0, 2, 0, 2, 1}},
    {3, 13, {1, 1, 0, 1, 0, 1, 0, 2, 2, 1, 2, 2, 0, 1}},
    {3, 14, {2, 0, 1, 2, 0, 1, 1, 2, 2, 0, 2, 1, 0, 1, 1}},
    {3, 15, {1, 1, 0, 0, 1, 1, 0, 1, 1, 0, 1, 2, 2, 0, 2, 1}},
    {3, 16, {2, 2, 0, 0, 2, 0, 2, 2, 1, 1, 1, 2, 1, 0, 2, 0, 1}},
    {3, 17, {2, 2, 1, 0, 1, 1, 2, 2, 0, 0, 2, 0, 2, 0, 2, 2, 0, 1}},
    {3, 18, {2, 2, 1, 0, 0, 2, 0, 0, 1, 2, 2, 1, 2, 2, 0, 1, 0, 1, 1}},
    {3, 19, {2, 0, 0, 1, 2, 0, 2, 2, 0, 1, 2, 0, 2, 0, 2, 0, 2, 0, 1, 1}},
    {3, 20, {1, 0, 2, 1, 0, 0, 2, 1, 0, 2, 2, 2, 0, 0, 0, 1, 1, 0, 1, 2, 1}},
    {3, 21, {1, 0, 0, 1, 1, 1, 1, 2, 1, 0, 1, 0, 1, 0, 0, 0, 2, 0, 1, 1, 2, 1}},
    {3, 22, {1, 0, 0, 1, 2, 1, 2, 2, 1, 2, 0, 2, 1, 1, 2, 1, 2, 1, 0, 1, 0, 2, 1}},
    {3, 23, {2, 0, 2, 2, 0, 1, 1, 0, 1, 0, 0, 2, 0, 0, 0, 1, 0, 0, 2, 1, 2, 2, 2, 1}},
    {3, 24, {2, 0, 0, 1, 1, 0, 2, 2, 0, 1, 0, 2, 0, 1, 1, 1, 1, 0, 1, 1, 2, 2, 0, 1, 1}},
    {3, 25, {1, 2, 2, 2, 1, 2, 2, 2, 0, 2, 2, 2, 0, 1, 1, 2, 2, 0, 0, 0, 1, 1, 1, 0, 2, 1}},
    {3, 26, {1, 0, 2, 1, 2, 0, 2, 0, 0, 0, 0, 0, 1, 1, 2, 1, 2, 1, 1, 2, 0, 0, 0, 1, 0, 2, 1}},
    {3, 27, {2, 2, 1, 1, 2, 0, 2, 1, 0, 2, 1, 2, 2, 0, 1, 1, 0, 2, 2, 0, 2, 2, 1, 1, 2, 0, 1, 1}},
    {3, 28, {1, 0, 2, 0, 2, 1, 0, 0, 2, 0, 1, 1, 0, 2, 1, 0, 1, 2, 2, 0, 0, 1, 2, 2, 2, 2, 2, 1, 1}},
    {3, 29, {2, 1, 2, 2, 2, 1, 0, 0, 1, 2, 0, 2, 2, 0, 1, 0, 2, 1, 2, 2, 2, 2, 0, 2, 2, 1, 2, 2, 1, 1}},
    {3, 30, {2, 0, 2, 0, 1, 0, 1, 1, 0, 1, 0, 0, 2, 0, 0, 1, 1, 0, 2, 0, 1, 0, 2, 2, 1, 1, 1, 1, 2, 2, 1}},
    {3, 31, {1, 0, 0, 1, 2, 2, 1, 1, 1, 2, 0, 0, 1, 2, 1, 0, 2, 0, 1, 2, 0, 1, 0, 1, 2, 2, 1, 2, 1, 0, 1, 1}},
    {3, 32, {2, 1, 1, 1, 1, 2, 0, 0, 0, 1, 0, 0, 1, 0, 0, 2, 0, 0, 0, 1, 0, 1, 2, 1, 1, 2, 1, 1, 0, 0, 1, 2, 1}},
    {5, 1, {1, 1}},
    {5, 2, {3, 0, 1}},
    {5, 3, {3, 1, 1, 1}},
    {5, 4, {4, 3, 4, 2, 1}},
    {5, 5, {4, 3, 3, 1, 2, 1}},
    {5, 6, {4, 4, 3, 0, 2, 3, 1}},
    {5, 7, {4, 1, 3, 3, 4, 2, 0, 1}},
    {5, 8, {1, 0, 2, 2, 0, 3, 2, 3, 1}},
    {5, 9, {3, 3, 4, 1, 1, 2, 1, 3, 3, 1}},
    {5, 10, {4, 0, 0, 3, 2, 2, 2, 0, 1, 1, 1}},
    {5, 11, {1, 4, 4, 3, 2, 4, 1, 4, 1, 2, 1, 1}},
    {5, 12, {4, 3, 4, 2, 4, 1, 4, 4, 3, 0, 2, 1, 1}},
    {5, 13, {3, 2, 3, 4, 0, 3, 0, 2, 2, 1, 2, 0, 1, 1}},
    {5, 14, {2, 3, 3, 1, 0, 4, 4, 1, 3, 3, 4, 1, 1, 3, 1}},
    {5, 15, {4, 4, 2, 0, 4, 3, 1, 3, 2, 1, 4, 1, 2, 4, 0, 1}},
    {5, 16, {3, 0, 0, 0, 3, 1, 3, 3, 4, 4, 1, 4, 0, 2, 1, 1, 1}},
    {5, 17, {1, 4, 1, 4, 4, 0, 4, 3, 0, 3, 2, 2, 3, 0, 4, 2, 3, 1}},
    {5, 18, {2, 0, 4, 4, 4, 2, 0, 0, 3, 1, 0, 4, 3, 4, 3, 2, 4, 1, 1}},
    {5, 19, {1, 1, 0, 4, 0, 3, 0, 0, 1, 4, 1, 0, 1, 1, 2, 1, 2, 0, 4, 1}},
    {5, 20, {1, 4, 2, 3, 0, 3, 1, 0, 1, 0, 0, 1, 4, 2, 2, 4, 1, 4, 4, 4, 1}},
    {5, 21, {2, 1, 4, 0, 4, 2, 4, 1, 4, 4, 0, 1, 3, 3, 4, 3, 0, 2, 3, 1, 2, 1}},
    {5, 22, {3, 2, 3, 2, 1, 0, 0, 3, 0, 1, 0, 1, 2, 2, 3, 3, 0, 2, 3, 1, 2, 3, 1}},
    {5, 23, {4, 0, 0, 0, 1, 0, 2, 0, 2, 0, 1, 0, 1, 4, 3, 4, 0, 2, 4, 1, 0, 4, 2, 1}},
    {5, 24, {1, 1, 1, 2, 3, 0, 3, 0, 2, 4, 0, 0, 3, 1, 0, 1, 1, 1, 3, 1, 1, 1, 0, 1, 1}},
    {5, 25, {1, 0, 0, 4, 4, 3, 2, 3, 4, 3, 2, 2, 3, 2, 2, 2, 3, 0, 4, 3, 0, 0, 4, 0, 0, 1}},
    {5, 26, {2, 0, 1, 4, 3, 0, 2, 2, 4, 4, 3, 3, 1, 2, 0, 1, 1, 1, 2, 3, 3, 0, 2, 2, 2, 2, 1}},
    {5, 27, {1, 2, 2, 2, 2, 1, 2, 2, 0, 0, 1, 4, 0, 0, 3, 4, 4, 2, 1, 4, 4, 2, 4, 4, 3, 3, 1, 1}},
    {5, 28, {4, 4, 3, 0, 3, 1, 4, 1, 3, 4, 4, 3, 2, 2, 3, 3, 4, 1, 4, 4, 4, 1, 0, 3, 3, 3, 4, 0, 1}},
    {5, 29, {1, 2, 3, 3, 3, 1, 4, 2, 0, 2, 4, 1, 3, 0, 4, 0, 1, 0, 0, 4, 3, 0, 3, 3, 3, 4, 1, 0, 3, 1}},
    {5, 30, {3, 3, 1, 3, 2, 4, 0, 4, 3, 3, 4, 1, 3, 3, 4, 0, 3, 0, 3, 0, 1, 1, 4, 1, 4, 0, 2, 3, 4, 3, 1}},
    {5, 31, {2, 0, 1, 4, 4, 1, 1, 3, 4, 1, 1, 0, 2, 1, 1, 3, 1, 4, 4, 0, 0, 2, 0, 3, 3, 0, 1, 0, 1, 1, 2, 1}},
    {5, 32, {4, 3, 1, 0, 2, 4, 0, 1, 2, 2, 1, 0, 4, 0, 2, 1, 4, 4, 3, 4, 2, 1, 2, 4, 1, 3, 0, 1, 4, 0, 1, 2, 1}},
    {7, 1, {5, 1}},
    {7, 2, {2, 0, 1}},
    {7, 3, {5, 0, 0, 1}},
    {7, 4, {6, 0, 3, 0, 1}},
    {7, 5, {4, 5, 0, 5, 5, 1}},
    {7, 6, {4, 0, 0, 0, 0, 0, 1}},
    {7, 7, {2, 5, 1, 6, 0, 4, 5, 1}},
    {7, 8, {2, 5, 2, 2, 4, 1, 2, 6, 1}},
    {7, 9, {2, 0, 4, 0, 4, 5, 6, 4, 6, 1}},
    {7, 10, {4, 4, 3, 0, 3, 3, 3, 5, 5, 5, 1}},
    {7, 11, {3, 1, 2, 3, 3, 4, 5, 5, 0, 5, 0, 1}},
    {7, 12, {4, 5, 4, 6, 3, 6, 3, 3, 3, 6, 5, 3, 1}},
    {7, 13, {3, 4, 3, 2, 6, 1, 1, 1, 3, 6, 1, 2, 5, 1}},
    {7, 14, {1, 3, 3, 2, 2, 2, 3, 6, 3, 5, 2, 1, 3, 1, 1}},
    {7, 15, {5, 1, 1, 3, 6, 6, 2, 0, 1, 6, 6, 5, 6, 0, 5, 1}},
    {7, 16, {4, 6, 4, 5, 0, 6, 4, 5, 0, 1, 6, 6, 6, 3, 6, 3, 1}},
    {7, 17, {4, 2, 2, 4, 2, 4, 3, 3, 3, 3, 6, 1, 0, 1, 2, 3, 2, 1}},
    {7, 18, {6, 5, 1, 4, 3, 5, 2, 5, 2, 6, 2, 4, 2, 4, 4, 4, 4, 1, 1}},
    {7, 19, {2, 5, 2, 3, 2, 3, 4, 5, 0, 0, 2, 2, 5, 1, 4, 6, 6, 2, 0, 1}},
    {7, 20, {1, 1, 4, 1, 2, 3, 2, 6, 4, 4, 2, 6, 2, 4, 3, 4, 0, 1, 1, 5, 1}},
    {7, 21, {4, 3, 1, 1, 6, 4, 0, 1, 2, 4, 3, 0, 3, 0, 4, 6, 2, 3, 4, 2, 4, 1}},
    {7, 22, {5, 2, 4, 2, 4, 4, 6, 5, 1, 0, 2, 2, 5, 6, 0, 2, 2, 4, 1, 0, 3, 5, 1}},
    {7, 23, {5, 0, 2, 4, 0, 3, 3, 0, 4, 5, 5, 4, 4, 6, 6, 5, 1, 3, 0, 1, 3, 6, 2, 1}},
    {7, 24, {4, 2, 2, 3, 3, 6, 4, 5, 4, 3, 3, 6, 4, 4, 2, 4, 1, 6, 6, 3, 4, 5, 2, 1, 1}},
    {7, 25, {6, 0, 0, 6, 0, 6, 6, 1, 3, 5, 6, 0, 6, 5, 0, 3, 2, 5, 0, 4, 6, 5, 3, 3, 5, 1}},
    {7, 26, {5, 3, 3, 3, 3, 3, 3, 0, 4, 4, 3, 1, 5, 2, 2, 0, 3, 4, 0, 2, 5, 5, 5, 5, 3, 5, 1}},
    {7, 27, {5, 5, 2, 6, 4, 0, 0, 2, 2, 0, 3, 4, 0, 4, 2, 6, 1, 1, 2, 0, 3, 2, 4, 5, 3, 3, 6, 1}},
    {7, 28, {6, 5, 6, 6, 6, 5, 0, 4, 4, 1, 4, 6, 4, 6, 5, 3, 6, 6, 3, 2, 3, 5, 5, 5, 1, 0, 2, 6, 1}},
    {7, 29, {4, 2, 5, 0, 5, 5, 3, 2, 3, 2, 3, 4, 5, 6, 4, 6, 5, 5, 4, 4, 5, 6, 2, 3, 0, 6, 3, 3, 1, 1}},
    {7, 30, {1, 1, 4, 4, 1, 0, 6, 5, 1, 2, 5, 5, 0, 1, 6, 4, 2, 4, 0, 0, 0, 1, 4, 3, 4, 2, 4, 6, 4, 1, 1}},
    {7, 31, {6, 3, 2, 5, 3, 2, 4, 6, 4, 1, 3, 6, 4, 6, 1, 3, 6, 2, 2, 3, 3, 5, 5, 6, 3, 5, 2, 2, 2, 5, 3, 1}},
    {7, 32, {5, 2, 1, 1, 3, 6, 6, 2, 4, 3, 5, 4, 0, 3, 1, 0, 6, 1, 2, 6, 3, 3, 2, 4, 3, 5, 6, 3, 0, 1, 2, 3, 1}},
    {11, 1, {9, 1}},
    {11, 2, {7, 6, 1}},
    {11, 3, {1, 4, 2, 1}},
    {11, 4, {3, 8, 2, 1, 1}},
    {11, 5, {7, 10, 4, 8, 4, 1}},
    {11, 6, {4, 8, 7, 8, 5, 8, 1}},
    {11, 7, {2, 0, 8, 9, 6, 4, 7, 1}},
    {11, 8, {6, 6, 7, 3, 5, 6, 9, 10, 1}},
    {11, 9, {7, 9, 2, 2, 2, 7, 4, 3, 10, 1}},
    {11, 10, {6, 9, 10, 6, 9, 0, 8, 4, 6, 1, 1}},
    {11, 11, {1, 7, 9, 5, 2, 7, 7, 4, 2, 2, 0, 1}},
    {11, 12, {3, 5, 4, 3, 10, 6, 6, 6, 0, 0, 2, 10, 1}},
    {11, 13, {8, 1, 1, 5, 7, 8, 4, 3, 6, 9, 4, 6, 0, 1}},
    {11, 14, {8, 9, 7, 7, 8, 2, 9, 3, 2, 10, 2, 9, 4, 3, 1}},
    {11, 15, {4, 1, 1, 10, 2, 1, 5, 7, 3, 4, 9, 3, 6, 8, 4, 1}},
    {11, 16, {10, 3, 0, 6, 8, 7, 1, 9, 1, 8, 2, 10, 8, 8, 2, 3, 1}},
    {11, 17, {8, 10, 7, 9, 0, 8, 5, 8, 3, 7, 2, 1, 10, 7, 10, 9, 10, 1}},
    {11, 18, {6, 5, 1, 9, 10, 9, 1, 2, 9, 3, 8, 1, 2, 5, 6, 5, 0, 10, 1}},
    {11, 19, {10, 4, 3, 9, 7, 4, 0, 0, 7, 8, 10, 1, 1, 8, 3, 10, 1, 9, 6, 1}},
    {11, 20, {3, 9, 2, 5, 2, 0, 0, 2, 10, 7, 5, 7, 0, 1, 0, 6, 2, 1, 9, 10, 1}},
    {11, 21, {8, 1, 10, 9, 2, 5, 3, 0, 7, 3, 6, 5, 2, 0, 3, 9, 9, 2, 1, 8, 2, 1}},
    {11, 22, {9, 6, 1, 6, 2, 4, 1, 6, 2, 3, 7, 8, 1, 0, 1, 8, 6, 0, 1, 1, 1, 7, 1}},
    {11, 23, {1, 2, 9, 3, 8, 7, 6, 4, 6, 4, 6, 4, 1, 9, 9, 8, 7, 8, 9, 1, 2, 5, 0, 1}},
    {11, 24, {3, 4, 0, 4, 3, 6, 0, 10, 2, 5, 8, 8, 5, 8, 1, 9, 6, 4, 8, 4, 2, 5, 8, 5, 1}},
    {11, 25, {1, 4, 10, 5, 3, 4, 7, 7, 3, 7, 10, 4, 9, 2, 7, 9, 7, 5, 1, 7, 6, 3, 0, 0, 2, 1}},
    {11, 26, {6, 7, 3, 8, 3, 4, 6, 8, 7, 3, 4, 7, 1, 5, 8, 8, 7, 8, 1, 5, 6, 1, 10, 6, 2, 7, 1}},
    {11, 27, {7, 8, 7, 4, 7, 9, 3, 10, 2, 3, 0, 4, 9, 3, 6, 3, 0, 4, 7, 4, 3, 0, 1, 2, 6, 5, 0, 1}},
    {11, 28, {2, 8, 2, 2, 0, 4, 8, 6, 4, 1, 0, 2, 0, 0, 6, 2, 3, 6, 1, 8, 6, 10, 0, 8, 2, 5, 6, 9, 1}},
    {11, 29, {4, 6, 9, 0, 8, 2, 5, 6, 2, 9, 7, 6, 9, 9, 10, 8, 9, 4, 8, 10, 6, 8, 7, 9, 3, 6, 2, 7, 8, 1}},
    {11, 30, {9, 9, 8, 7, 6, 6, 3, 8, 0, 7, 3, 4, 4, 7, 3, 4, 9, 3, 2, 10, 5, 6, 1, 7, 4, 2, 5, 1, 8, 7, 1}},
    {11, 31, {10, 0, 5, 1, 4, 4, 2, 4, 9, 8, 6, 1, 8, 5, 2, 3, 8, 8, 3, 10, 6, 8, 6, 10, 10, 4, 1, 7, 1, 6, 1, 1}},
    {11, 32, {1, 5, 7, 10, 10, 7, 8, 7, 1, 6, 8, 7, 2, 0, 10, 2, 1, 2, 4, 2, 6, 4, 1, 4, 1, 8, 2, 5, 8, 5, 7, 9, 1}},
    {13, 1, {11, 1}},
    {13, 2, {3, 6, 1}},
    {13, 3, {11, 1, 10, 1}},
    {13, 4, {12, 7, 4, 3, 1}},
    {13, 5, {4, 6, 2, 1, 6, 1}},
    {13, 6, {1, 2, 12, 3, 9, 2, 1}},
    {13, 7, {10, 11, 2, 8, 0, 4, 7, 1}},
    {13, 8, {3, 3, 9, 7, 1, 11, 12, 3, 1}},
    {13, 9, {3, 8, 3, 3, 2, 5, 2, 6, 9, 1}},
    {13, 10, {11, 10, 7, 1, 9, 11, 8, 3, 8, 5, 1}},
    {13, 11, {5, 2, 2, 12, 0, 6, 2, 7, 1, 8, 7, 1}},
    {13, 12, {2, 4, 3, 8, 12, 12, 9, 3, 1, 7, 0, 1, 1}},
    {13, 13, {12, 3, 3, 5, 8, 2, 5, 5, 11, 4, 6, 9, 8, 1}},
    {13, 14, {8, 6, 1, 11, 2, 8, 9, 8, 5, 6, 0, 11, 1, 2, 1}},
    {13, 15, {8, 6, 3, 8, 12, 5, 11, 1, 1, 9, 5, 6, 8, 8, 0, 1}},
    {13, 16, {10, 8, 11, 2, 7, 12, 3, 8, 3, 5, 10, 10, 5, 11, 9, 0, 1}},
    {13, 17, {3, 2, 11, 12, 4, 7, 9, 5, 7, 12, 5, 9, 9, 10, 12, 3, 2, 1}},
    {13, 18, {4, 5, 9, 8, 9, 3, 5, 7, 9, 5, 4, 4, 0, 0, 1, 11, 4, 9, 1}},
    {13, 19, {3, 4, 2, 8, 9, 2, 11, 12, 7, 9, 3, 11, 11, 6, 4, 11, 6, 5, 6, 1}},
    {13, 20, {11, 3, 10, 4, 6, 2, 12, 10, 3, 3, 2, 2, 5, 5, 0, 10, 2, 2, 10, 12, 1}},
    {13, 21, {5, 0, 9, 4, 9, 0, 3, 1, 7, 10, 12, 8, 1, 2, 10, 12, 12, 10, 7, 4, 9, 1}},
    {13, 22, {1, 2, 2, 2, 10, 10, 7, 4, 6, 7, 7, 11, 11, 2, 11, 5, 2, 9, 2, 3, 6, 3, 1}},
    {13, 23, {3, 3, 9, 6, 9, 6, 5, 3, 7, 6, 5, 5, 7, 0, 3, 1, 7, 3, 5, 10, 1, 4, 10, 1}},
    {13, 24, {11, 10, 2, 4, 6, 11, 9, 6, 4, 12, 8, 8, 4, 2, 9, 7, 9, 1, 3, 5, 2, 0, 0, 5, 1}},
    {13, 25, {12, 10, 12, 8, 10, 8, 2, 9, 3, 10, 1, 7, 5, 9, 6, 3, 11, 10, 3, 6, 9, 9, 9, 12, 9, 1}},
    {13, 26, {1, 1, 10, 7, 1, 0, 10, 6, 0, 8, 5, 11, 9, 4, 1, 11, 5, 5, 11, 4, 6, 5, 9, 4, 1, 9, 1}},
    {13, 27, {2, 8, 7, 6, 9, 10, 0, 5, 1, 11, 3, 6, 9, 8, 3, 7, 10, 8, 0, 2, 12, 0, 0, 10, 4, 2, 4, 1}},
    {13, 28, {4, 12, 11, 8, 5, 11, 8, 11, 8, 2, 11, 0, 2, 2, 12, 6, 12, 2, 8, 12, 1, 3, 0, 6, 5, 11, 8, 1, 1}},
    {13, 29, {5, 4, 8, 8, 10, 4, 12, 8, 1, 5, 8, 8, 1, 10, 4, 11, 2, 2, 12, 4, 10, 11, 9, 10, 1, 2, 0, 8, 7, 1}},
    {13, 30, {6, 2, 6, 1, 6, 12, 8, 0, 3, 11, 4, 5, 1, 11, 9, 1, 7, 1, 6, 6, 4, 0, 5, 11, 12, 1, 4, 8, 6, 0, 1}},
    {13, 31, {7, 10, 4, 12, 2, 12, 3, 1, 6, 10, 8, 6, 7, 7, 12, 6, 0, 3, 12, 11, 1, 7, 9, 10, 7, 9, 8, 7, 12, 12, 4, 1}},
    {13, 32, {2, 3, 7, 3, 7, 5, 7, 5, 0, 7, 7, 3, 12, 11, 3, 10, 0, 4, 4, 6, 5, 6, 0, 5, 0, 9, 3, 8, 2, 11, 1, 2, 1}},
};

}  // namespace rigidmat::exactalg

#endif  // RIGIDMAT_EXACTALG_IRREDUCIBLE_TABLE_HPP
