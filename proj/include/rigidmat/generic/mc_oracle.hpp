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

#ifndef RIGIDMAT_GENERIC_MC_ORACLE_HPP
#define RIGIDMAT_GENERIC_MC_ORACLE_HPP

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "rigidmat/exactalg/field_spec.hpp"
#include "rigidmat/exactalg/matrix.hpp"
#include "rigidmat/exactalg/rank.hpp"
#include "rigidmat/exactalg/rank_table.hpp"
#include "rigidmat/matroid/oracle.hpp"
#include "rigidmat/rng.hpp"

namespace rigidmat::generic {

using matroid::Certainty;
using matroid::GroundPtr;
using matroid::Mask;
using matroid::MatroidOracle;

/// Number of values one sampled entry ranges over.
inline mpz_class sample_set_size(const exactalg::FieldSpec& spec) {
  struct Visitor {
    mpz_class operator()(const exactalg::PrimeFieldSpec& s) const { return mpz_class(std::to_string(s.modulus)); }
    mpz_class operator()(const exactalg::ExtensionFieldSpec& s) const {
      mpz_class out;
      mpz_ui_pow_ui(out.get_mpz_t(), s.p, static_cast<unsigned long>(s.k));
      return out;
    }
    mpz_class operator()(const exactalg::RationalsSpec& s) const {
      return mpz_class(2) * mpz_class(std::to_string(s.sample_window)) + 1;
    }
  };
  return std::visit(Visitor{}, spec);
}

/// Per-query bound (D / |sample set|)^trials. A maximal minor of a matrix
/// whose entries have degree deg_entry in the sampled values has degree at
/// most deg_entry * rows, so D = deg_entry * rows (Schwartz-Zippel).
inline mpq_class schwartz_zippel_bound(std::size_t rows, int deg_entry, const exactalg::FieldSpec& spec, int trials) {
  const mpq_class d(static_cast<long>(std::max<std::size_t>(rows, 1) * static_cast<std::size_t>(deg_entry)));
  mpq_class ratio = d / mpq_class(sample_set_size(spec));
  if (ratio > 1) ratio = 1;
  mpq_class out = 1;
  for (int t = 0; t < trials; ++t) out *= ratio;
  return out;
}

/// Monte Carlo column matroid: each trial samples a fresh matrix with its
/// own Rng stream; a subset's rank is the maximum over trials. Under-reports
/// only, never over-reports, the generic rank.
inline MatroidOracle mc_column_oracle(GroundPtr ground, std::function<exactalg::Matrix(Rng&)> build, int trials,
                                      std::uint64_t seed, int deg_entry, const exactalg::FieldSpec& spec,
                                      std::string name) {
  require(trials >= 1, "mc oracle: trials must be positive");
  auto matrices = std::make_shared<std::vector<exactalg::Matrix>>();
  const Rng root(seed);
  for (int t = 0; t < trials; ++t) {
    Rng rng = root.derive(static_cast<std::uint64_t>(t));
    matrices->push_back(build(rng));
    require(exactalg::cols(matrices->back()) == ground->size(), "mc oracle: builder produced the wrong column count");
  }
  const std::size_t rows = exactalg::rows(matrices->front());
  auto rank_fn = [matrices, rows](Mask x) {
    const auto cols = exactalg::mask_bits(x);
    const int cap = static_cast<int>(std::min(rows, cols.size()));
    int best = 0;
    for (const auto& m : *matrices) {
      best = std::max(best, static_cast<int>(exactalg::mat_rank_of_columns(m, cols)));
      if (best == cap) break;
    }
    return best;
  };
  auto table_fn = [matrices, rows](Mask base, Mask support) {
    std::vector<std::uint8_t> best;
    const int b = std::popcount(base);
    for (const auto& m : *matrices) {
      auto t = exactalg::column_rank_table(m, base, support);
      if (best.empty()) {
        best = std::move(t);
      } else {
        for (std::size_t x = 0; x < best.size(); ++x) best[x] = std::max(best[x], t[x]);
      }
      bool saturated = true;
      for (std::uint64_t x = 0; x < best.size() && saturated; ++x)
        saturated = best[x] == std::min<std::size_t>(rows, static_cast<std::size_t>(b + std::popcount(x)));
      if (saturated) break;
    }
    return best;
  };
  return MatroidOracle(std::move(ground), rank_fn, table_fn,
                       Certainty::monte_carlo(schwartz_zippel_bound(rows, deg_entry, spec, trials)), std::move(name));
}

}  // namespace rigidmat::generic

#endif  // RIGIDMAT_GENERIC_MC_ORACLE_HPP
