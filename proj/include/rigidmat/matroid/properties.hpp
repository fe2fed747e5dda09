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

#ifndef RIGIDMAT_MATROID_PROPERTIES_HPP
#define RIGIDMAT_MATROID_PROPERTIES_HPP

#include <optional>
#include <string>

#include "rigidmat/matroid/oracle.hpp"
#include "rigidmat/rng.hpp"

namespace rigidmat::matroid {

/// Uniformly random subset of the ground set.
inline Mask random_subset(Rng& rng, std::size_t size) {
  Mask x = 0;
  for (std::size_t i = 0; i < size; ++i)
    if (rng.coin()) x |= Mask{1} << i;
  return x;
}

struct AxiomReport {
  std::uint64_t probes = 0;
  std::uint64_t failures = 0;
  std::string first_failure;

  bool ok() const { return failures == 0; }
};

/// Spot-checks rank(empty) = 0, unit increase, monotonicity on random
/// (X, e) and submodularity on random (X, Y), `probes` of each.
inline AxiomReport check_rank_axioms(const MatroidOracle& m, int probes, Rng& rng) {
  AxiomReport rep;
  const std::size_t n = m.size();
  auto fail = [&](const std::string& what) {
    if (rep.failures++ == 0) rep.first_failure = what;
  };
  if (m.rank(0) != 0) fail("rank of the empty set is " + std::to_string(m.rank(0)));
  for (int t = 0; t < probes && n > 0; ++t) {
    ++rep.probes;
    const Mask x = random_subset(rng, n);
    const Mask e = Mask{1} << rng.uniform_below(n);
    const int rx = m.rank(x), rxe = m.rank(x | e);
    if (rxe < rx || rxe > rx + 1) fail("unit increase fails at " + m.ground()->format(x) + " + " + m.ground()->format(e));
    if (rx > popcount(x)) fail("rank exceeds cardinality at " + m.ground()->format(x));
  }
  for (int t = 0; t < probes; ++t) {
    ++rep.probes;
    const Mask x = random_subset(rng, n), y = random_subset(rng, n);
    if (m.rank(x | y) + m.rank(x & y) > m.rank(x) + m.rank(y))
      fail("submodularity fails at " + m.ground()->format(x) + ", " + m.ground()->format(y));
  }
  return rep;
}

}  // namespace rigidmat::matroid

#endif  // RIGIDMAT_MATROID_PROPERTIES_HPP
