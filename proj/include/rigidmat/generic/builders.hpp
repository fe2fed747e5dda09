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

#ifndef RIGIDMAT_GENERIC_BUILDERS_HPP
#define RIGIDMAT_GENERIC_BUILDERS_HPP

#include <string>
#include <vector>

#include "rigidmat/exactalg/matrix.hpp"
#include "rigidmat/generic/configs.hpp"
#include "rigidmat/generic/mc_oracle.hpp"
#include "rigidmat/matroid/ground_set.hpp"
#include "rigidmat/rng.hpp"

namespace rigidmat::generic {

namespace detail {

template <class Field>
std::vector<std::vector<typename Field::Element>> sample_vectors(const Field& f, int count, int dim, Rng& rng) {
  std::vector<std::vector<typename Field::Element>> out(static_cast<std::size_t>(count));
  for (auto& v : out) {
    v.reserve(static_cast<std::size_t>(dim));
    for (int a = 0; a < dim; ++a) v.push_back(f.sample(rng));
  }
  return out;
}

template <class Field>
exactalg::DenseMatrix<Field> tensor(const Field& f, int m, int n, int s, int r, Rng& rng) {
  const auto u = sample_vectors(f, m, s, rng);
  const auto v = sample_vectors(f, n, r, rng);
  exactalg::DenseMatrix<Field> out(f, static_cast<std::size_t>(s * r), static_cast<std::size_t>(m * n));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < s; ++a)
        for (int b = 0; b < r; ++b)
          out(static_cast<std::size_t>(a * r + b), static_cast<std::size_t>(i * n + j)) = f.mul(u[i][a], v[j][b]);
  return out;
}

/// Row of basis element e_a e_b (a <= b) in Sym^2 K^r, or e_a ^ e_b (a < b)
/// in wedge^2 K^r, both in lexicographic order.
inline std::size_t sym_row(int a, int b, int r) {
  // Pairs (a', b') with a' <= b' before (a, b).
  return static_cast<std::size_t>(a * r - a * (a - 1) / 2 + (b - a));
}
inline std::size_t wedge_row(int a, int b, int r) {
  return static_cast<std::size_t>(a * (r - 1) - a * (a - 1) / 2 + (b - a - 1));
}

template <class Field>
exactalg::DenseMatrix<Field> sym(const Field& f, int n, int r, Rng& rng) {
  const auto v = sample_vectors(f, n, r, rng);
  const std::size_t rows = static_cast<std::size_t>(r * (r + 1) / 2);
  const std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
  exactalg::DenseMatrix<Field> out(f, rows, pairs + static_cast<std::size_t>(n));
  const auto two = f.from_int(2);
  std::size_t col = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++col)
      for (int a = 0; a < r; ++a) {
        out(sym_row(a, a, r), col) = f.mul(v[i][a], v[j][a]);
        for (int b = a + 1; b < r; ++b)
          out(sym_row(a, b, r), col) = f.add(f.mul(v[i][a], v[j][b]), f.mul(v[i][b], v[j][a]));
      }
  for (int i = 0; i < n; ++i, ++col)
    for (int a = 0; a < r; ++a) {
      out(sym_row(a, a, r), col) = f.mul(v[i][a], v[i][a]);
      for (int b = a + 1; b < r; ++b) out(sym_row(a, b, r), col) = f.mul(two, f.mul(v[i][a], v[i][b]));
    }
  return out;
}

template <class Field>
exactalg::DenseMatrix<Field> wedge(const Field& f, int n, int r, Rng& rng) {
  const auto v = sample_vectors(f, n, r, rng);
  const std::size_t rows = static_cast<std::size_t>(r * (r - 1) / 2);
  exactalg::DenseMatrix<Field> out(f, rows, static_cast<std::size_t>(n * (n - 1) / 2));
  std::size_t col = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++col)
      for (int a = 0; a < r; ++a)
        for (int b = a + 1; b < r; ++b)
          out(wedge_row(a, b, r), col) = f.sub(f.mul(v[i][a], v[j][b]), f.mul(v[i][b], v[j][a]));
  return out;
}

}  // namespace detail

/// (s*r) x (m*n); column (i, j) is u_i (x) v_j, coordinate a*r + b = u_i[a] v_j[b].
inline exactalg::Matrix build_tensor_columns(const TensorConfig& cfg, Rng& rng) {
  cfg.validate();
  return std::visit([&](const auto& f) -> exactalg::Matrix { return detail::tensor(f, cfg.m, cfg.n, cfg.s, cfg.r, rng); },
                    exactalg::field_ops(cfg.field_spec()));
}

/// binom(r+1, 2) x (binom(n, 2) + n); columns v_i v_j for i < j, then v_i^2.
inline exactalg::Matrix build_sym_columns(const SymConfig& cfg, Rng& rng) {
  cfg.validate();
  return std::visit([&](const auto& f) -> exactalg::Matrix { return detail::sym(f, cfg.n, cfg.r, rng); },
                    exactalg::field_ops(cfg.field_spec()));
}

/// binom(r, 2) x binom(n, 2); columns v_i ^ v_j for i < j.
inline exactalg::Matrix build_wedge_columns(const WedgeConfig& cfg, Rng& rng) {
  cfg.validate();
  return std::visit([&](const auto& f) -> exactalg::Matrix { return detail::wedge(f, cfg.n, cfg.r, rng); },
                    exactalg::field_ops(cfg.field_spec()));
}

enum class GenericKind { Tensor, SymPower, WedgePower };

inline std::string char_suffix(std::uint64_t p) { return std::to_string(p); }

inline MatroidOracle mc_oracle(const TensorConfig& cfg) {
  cfg.validate();
  auto ground = matroid::GroundSet::grid(cfg.m, cfg.n);
  const std::string name = "T_{" + std::to_string(cfg.m) + "," + std::to_string(cfg.n) + "}(" + std::to_string(cfg.s) +
                           "," + std::to_string(cfg.r) + "," + char_suffix(cfg.characteristic) + ")";
  return mc_column_oracle(ground, [cfg](Rng& rng) { return build_tensor_columns(cfg, rng); }, cfg.trials, cfg.seed, 2,
                          cfg.field_spec(), name);
}

inline MatroidOracle mc_oracle(GenericKind kind, const PowerConfig& cfg) {
  cfg.validate();
  const std::string args = "(" + std::to_string(cfg.r) + "," + char_suffix(cfg.characteristic) + ")";
  switch (kind) {
    case GenericKind::SymPower:
      return mc_column_oracle(matroid::GroundSet::pairs_and_singletons(cfg.n),
                              [cfg](Rng& rng) { return build_sym_columns(cfg, rng); }, cfg.trials, cfg.seed, 2,
                              cfg.field_spec(), "Sym_" + std::to_string(cfg.n) + args);
    case GenericKind::WedgePower:
      return mc_column_oracle(matroid::GroundSet::pairs(cfg.n),
                              [cfg](Rng& rng) { return build_wedge_columns(cfg, rng); }, cfg.trials, cfg.seed, 2,
                              cfg.field_spec(), "W_" + std::to_string(cfg.n) + args);
    case GenericKind::Tensor:
      break;
  }
  throw InvalidArgument("mc_oracle: the tensor matroid takes a TensorConfig");
}

}  // namespace rigidmat::generic

#endif  // RIGIDMAT_GENERIC_BUILDERS_HPP
