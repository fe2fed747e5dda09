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

#ifndef RIGIDMAT_GENERIC_CONFIGS_HPP
#define RIGIDMAT_GENERIC_CONFIGS_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "rigidmat/errors.hpp"
#include "rigidmat/exactalg/field_spec.hpp"

namespace rigidmat::generic {

inline constexpr int kDefaultTrials = 5;
/// Finite fields standing in for "sufficiently large" must have at least 2^30 elements.
inline constexpr int kMinFieldLog2 = 30;

/// Resolves the field for a characteristic and checks that an explicit
/// choice is consistent with it.
inline exactalg::FieldSpec resolve_field(std::uint64_t characteristic, const std::optional<exactalg::FieldSpec>& field) {
  if (!field) return exactalg::field_for_characteristic(characteristic, kMinFieldLog2);
  const auto& f = *field;
  require(exactalg::characteristic(f) == characteristic,
          "field " + exactalg::describe(f) + " does not have characteristic " + std::to_string(characteristic));
  if (characteristic != 0) {
    require(exactalg::sample_space_log2(f) >= kMinFieldLog2 - 1e-9,
            "field " + exactalg::describe(f) + " is smaller than 2^30 and cannot stand in for a generic field");
  }
  return f;
}

/// T_{m,n}(s, r, p): vectors u_i (x) v_j with u_i in K^s, v_j in K^r.
struct TensorConfig {
  int m = 0;
  int n = 0;
  int s = 0;
  int r = 0;
  std::uint64_t characteristic = 0;
  std::optional<exactalg::FieldSpec> field;
  int trials = kDefaultTrials;
  std::uint64_t seed = 1;

  void validate() const {
    require(m >= 0 && n >= 0, "TensorConfig: negative grid dimension");
    require(s >= 0 && s <= m, "TensorConfig: need 0 <= s <= m");
    require(r >= 0 && r <= n, "TensorConfig: need 0 <= r <= n");
    require(m * n <= 64, "TensorConfig: grids above 64 cells are not supported");
    require(trials >= 1, "TensorConfig: trials must be positive");
    resolve_field(characteristic, field);
  }
  exactalg::FieldSpec field_spec() const { return resolve_field(characteristic, field); }
};

/// S_n(r, p) (products v_i v_j in Sym^2) or W_n(r, p) (v_i ^ v_j in wedge^2),
/// with v_i in K^r.
struct PowerConfig {
  int n = 0;
  int r = 0;
  std::uint64_t characteristic = 0;
  std::optional<exactalg::FieldSpec> field;
  int trials = kDefaultTrials;
  std::uint64_t seed = 1;

  void validate() const {
    require(n >= 0 && r >= 0, "PowerConfig: negative size");
    require(trials >= 1, "PowerConfig: trials must be positive");
    resolve_field(characteristic, field);
  }
  exactalg::FieldSpec field_spec() const { return resolve_field(characteristic, field); }
};

using SymConfig = PowerConfig;
using WedgeConfig = PowerConfig;

}  // namespace rigidmat::generic

#endif  // RIGIDMAT_GENERIC_CONFIGS_HPP
