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

// Regenerates include/rigidmat/exactalg/irreducible_table.hpp:
//
//   gen_irreducible > include/rigidmat/exactalg/irreducible_table.hpp
//
// Random search (fixed seed) plus the Ben-Or irreducibility test.

#include <cstdio>

#include "rigidmat/exactalg/poly_gfp.hpp"
#include "rigidmat/rng.hpp"

int main() {
  using namespace rigidmat;
  constexpr std::uint32_t kPrimes[] = {2, 3, 5, 7, 11, 13};
  constexpr int kMaxDegree = 32;
  Rng rng(0x5eed'1a7e'2026ULL);

  std::printf("%s", R"(// Copyright 2026 The rigidmat Authors
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
)");
  for (std::uint32_t p : kPrimes) {
    for (int k = 1; k <= kMaxDegree; ++k) {
      const auto f = exactalg::gfp::find_irreducible(p, k, rng);
      std::printf("    {%u, %d, {", p, k);
      for (std::size_t i = 0; i < f.size(); ++i) std::printf("%s%u", i == 0 ? "" : ", ", f[i]);
      std::printf("}},\n");
    }
  }
  std::printf("%s", R"(};

}  // namespace rigidmat::exactalg

#endif  // RIGIDMAT_EXACTALG_IRREDUCIBLE_TABLE_HPP
)");
  return 0;
}
