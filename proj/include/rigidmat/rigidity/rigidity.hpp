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

#ifndef RIGIDMAT_RIGIDITY_RIGIDITY_HPP
#define RIGIDMAT_RIGIDITY_RIGIDITY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rigidmat/exactalg/field_spec.hpp"
#include "rigidmat/exactalg/matrix.hpp"
#include "rigidmat/generic/builders.hpp"
#include "rigidmat/generic/mc_oracle.hpp"
#include "rigidmat/matroid/operations.hpp"
#include "rigidmat/rng.hpp"

namespace rigidmat::rigidity {

using matroid::EdgeSet;
using matroid::GroundSet;
using matroid::Mask;
using matroid::MatroidOracle;

struct Bipartite {
  int m = 0, n = 0, a = 0, b = 0;
};
struct Hyper {
  int n = 0, d = 0;
};
struct SymCompletion {
  int n = 0, d = 0;
};
using Family = std::variant<Bipartite, Hyper, SymCompletion>;

struct RigidityParams {
  Family family;
  exactalg::FieldSpec field = exactalg::RationalsSpec{};
  int trials = generic::kDefaultTrials;
  std::uint64_t seed = 1;
};

inline long binom2(long x) { return x * (x - 1) / 2; }

/// Closed-form rank of the full ground set.
inline long expected_rank(const Family& f) {
  struct Visitor {
    long operator()(const Bipartite& p) const { return long{p.a} * p.n + long{p.b} * p.m - long{p.a} * p.b; }
    long operator()(const Hyper& p) const { return long{p.d} * p.n - binom2(p.d + 1); }
    long operator()(const SymCompletion& p) const { return long{p.n} * p.d - binom2(p.d); }
  };
  return std::visit(Visitor{}, f);
}

inline std::string describe(const Family& f) {
  struct Visitor {
    std::string operator()(const Bipartite& p) const {
      return "B_{" + std::to_string(p.m) + "," + std::to_string(p.n) + "}(" + std::to_string(p.a) + "," +
             std::to_string(p.b) + ")";
    }
    std::string operator()(const Hyper& p) const {
      return "H_" + std::to_string(p.n) + "(" + std::to_string(p.d) + ")";
    }
    std::string operator()(const SymCompletion& p) const {
      return "S_" + std::to_string(p.n) + "(" + std::to_string(p.d) + ")";
    }
  };
  return std::visit(Visitor{}, f);
}

inline void validate(const Family& f) {
  struct Visitor {
    void operator()(const Bipartite& p) const {
      require(p.m >= 0 && p.n >= 0, "Bipartite: negative grid dimension");
      require(p.a >= 0 && p.a <= p.m, "Bipartite: need 0 <= a <= m");
      require(p.b >= 0 && p.b <= p.n, "Bipartite: need 0 <= b <= n");
    }
    void operator()(const Hyper& p) const { require(p.n >= 0 && p.d >= 0 && p.d <= p.n, "Hyper: need 0 <= d <= n"); }
    void operator()(const SymCompletion& p) const {
      require(p.n >= 0 && p.d >= 0 && p.d <= p.n, "SymCompletion: need 0 <= d <= n");
    }
  };
  std::visit(Visitor{}, f);
}

namespace detail {

template <class Field>
std::vector<typename Field::Element> sample_all(const Field& f, std::size_t count, Rng& rng) {
  std::vector<typename Field::Element> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(f.sample(rng));
  return out;
}

template <class Field>
exactalg::DenseMatrix<Field> bipartite(const Field& f, int m, int n, int a, int b, Rng& rng) {
  // x is m x a, y is n x b.
  const auto x = sample_all(f, static_cast<std::size_t>(m * a), rng);
  const auto y = sample_all(f, static_cast<std::size_t>(n * b), rng);
  exactalg::DenseMatrix<Field> out(f, static_cast<std::size_t>(a * n + b * m), static_cast<std::size_t>(m * n));
  for (int j = 0; j < a; ++j)
    for (int k = 0; k < n; ++k)
      for (int p = 0; p < m; ++p)
        out(static_cast<std::size_t>(j * n + k), static_cast<std::size_t>(p * n + k)) = x[static_cast<std::size_t>(p * a + j)];
  for (int l = 0; l < b; ++l)
    for (int i = 0; i < m; ++i)
      for (int q = 0; q < n; ++q)
        out(static_cast<std::size_t>(a * n + l * m + i), static_cast<std::size_t>(i * n + q)) =
            y[static_cast<std::size_t>(q * b + l)];
  return out;
}

/// Column index of {i, k}, i != k, in the lexicographic order of binom([n], 2).
inline std::size_t pair_column(int i, int k, int n) {
  if (i > k) std::swap(i, k);
  return static_cast<std::size_t>(i * n - i * (i + 1) / 2 + (k - i - 1));
}

template <class Field>
exactalg::DenseMatrix<Field> hyper(const Field& f, int n, int d, Rng& rng) {
  // Row (i, j) holds the coordinates of (sum_k x_{kj} e_k) ^ e_i.
  const auto x = sample_all(f, static_cast<std::size_t>(n * d), rng);
  exactalg::DenseMatrix<Field> out(f, static_cast<std::size_t>(n * d), static_cast<std::size_t>(n * (n - 1) / 2));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < n; ++k) {
        if (k == i) continue;
        const auto& v = x[static_cast<std::size_t>(k * d + j)];
        out(static_cast<std::size_t>(i * d + j), pair_column(i, k, n)) = k < i ? v : f.neg(v);
      }
  return out;
}

template <class Field>
exactalg::DenseMatrix<Field> sym_completion(const Field& f, int n, int d, Rng& rng) {
  const auto x = sample_all(f, static_cast<std::size_t>(n * d), rng);
  const std::size_t pairs = static_cast<std::size_t>(n * (n - 1) / 2);
  exactalg::DenseMatrix<Field> out(f, static_cast<std::size_t>(n * d), pairs + static_cast<std::size_t>(n));
  const auto two = f.from_int(2);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < d; ++j) {
      const auto row = static_cast<std::size_t>(i * d + j);
      out(row, pairs + static_cast<std::size_t>(i)) = f.mul(two, x[static_cast<std::size_t>(i * d + j)]);
      for (int k = 0; k < n; ++k)
        if (k != i) out(row, pair_column(i, k, n)) = x[static_cast<std::size_t>(k * d + j)];
    }
  return out;
}

}  // namespace detail

/// (an + bm) x mn. Rows (j, k) in [a] x [n] come first, then (l, i) in [b] x [m].
inline exactalg::Matrix build_bipartite_matrix(int m, int n, int a, int b, Rng& rng, const exactalg::FieldSpec& field) {
  validate(Bipartite{m, n, a, b});
  return std::visit([&](const auto& f) -> exactalg::Matrix { return detail::bipartite(f, m, n, a, b, rng); },
                    exactalg::field_ops(field));
}

/// nd x binom(n, 2); row (i, j): +x_{kj} at {k, i} for k < i, -x_{kj} at {i, k} for k > i.
inline exactalg::Matrix build_hyper_matrix(int n, int d, Rng& rng, const exactalg::FieldSpec& field) {
  validate(Hyper{n, d});
  return std::visit([&](const auto& f) -> exactalg::Matrix { return detail::hyper(f, n, d, rng); },
                    exactalg::field_ops(field));
}

/// nd x (binom(n, 2) + n); row (i, j): 2x_{ij} at singleton i, x_{kj} at {i, k}.
inline exactalg::Matrix build_sym_completion_matrix(int n, int d, Rng& rng, const exactalg::FieldSpec& field) {
  validate(SymCompletion{n, d});
  if (exactalg::characteristic(field) == 2) {
    throw InvalidArgument(
        "symmetric completion in characteristic 2 is rejected: the parametrization is not separable there, "
        "so the column matroid of this matrix is not the completion matroid");
  }
  return std::visit([&](const auto& f) -> exactalg::Matrix { return detail::sym_completion(f, n, d, rng); },
                    exactalg::field_ops(field));
}

/// Column matroid of the family's matrix, as a Monte Carlo oracle with
/// `trials` independent substitutions.
inline MatroidOracle rigidity_oracle(const RigidityParams& params) {
  validate(params.family);
  const auto field = params.field;
  struct Visitor {
    const RigidityParams& p;
    const exactalg::FieldSpec& field;
    MatroidOracle operator()(const Bipartite& b) const {
      return generic::mc_column_oracle(
          GroundSet::grid(b.m, b.n), [b, f = field](Rng& rng) { return build_bipartite_matrix(b.m, b.n, b.a, b.b, rng, f); },
          p.trials, p.seed, 1, field, describe(b));
    }
    MatroidOracle operator()(const Hyper& h) const {
      return generic::mc_column_oracle(
          GroundSet::pairs(h.n), [h, f = field](Rng& rng) { return build_hyper_matrix(h.n, h.d, rng, f); }, p.trials,
          p.seed, 1, field, describe(h));
    }
    MatroidOracle operator()(const SymCompletion& s) const {
      return generic::mc_column_oracle(
          GroundSet::pairs_and_singletons(s.n),
          [s, f = field](Rng& rng) { return build_sym_completion_matrix(s.n, s.d, rng, f); }, p.trials, p.seed, 1,
          field, describe(s));
    }
  };
  return std::visit(Visitor{params, field}, params.family);
}

/// Graph rigidity matroid in R^d on binom([n], 2): S_n(d + 1) with the
/// diagonal (singleton) elements contracted.
inline MatroidOracle graph_rigidity(int n, int d, int trials = generic::kDefaultTrials, std::uint64_t seed = 1) {
  require(d >= 0 && d + 1 <= n, "graph_rigidity: need 0 <= d < n");
  auto s = rigidity_oracle({SymCompletion{n, d + 1}, exactalg::RationalsSpec{}, trials, seed});
  const auto pairs = static_cast<std::size_t>(n * (n - 1) / 2);
  Mask diag = 0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) diag |= Mask{1} << (pairs + i);
  return matroid::minor(s, EdgeSet(s.ground(), diag), EdgeSet(s.ground()));
}

struct DualityReport {
  std::string rigidity_name;
  std::string generic_name;
  bool equal = true;
  bool exhaustive = true;
  std::optional<EdgeSet> witness;
  /// Ranks of the full ground sets.
  int rank_dual_rigidity = 0;
  int rank_generic = 0;
  /// Ranks at the witness, when there is one.
  int witness_rank_dual = 0;
  int witness_rank_generic = 0;
  std::uint64_t subsets_checked = 0;
  matroid::Certainty certainty;
};

/// dual(rigidity matroid) against its generic counterpart:
/// B_{m,n}(a,b)* = T_{m,n}(m-a, n-b, 0), S_n(d)* = Sym_n(n-d, 0), H_n(d)* = W_n(n-d, 0).
inline DualityReport verify_duality(const Family& family, int trials, std::uint64_t seed,
                                    const matroid::EqualityMode& mode) {
  validate(family);
  const RigidityParams params{family, exactalg::RationalsSpec{}, trials, seed};
  const MatroidOracle rig = rigidity_oracle(params);
  // An independent seed stream for the generic side.
  const std::uint64_t gseed = Rng::mix(seed ^ 0x7e9a7a11ULL);
  struct Visitor {
    int trials;
    std::uint64_t gseed;
    MatroidOracle operator()(const Bipartite& b) const {
      return generic::mc_oracle(generic::TensorConfig{b.m, b.n, b.m - b.a, b.n - b.b, 0, std::nullopt, trials, gseed});
    }
    MatroidOracle operator()(const Hyper& h) const {
      return generic::mc_oracle(generic::GenericKind::WedgePower,
                                generic::PowerConfig{h.n, h.n - h.d, 0, std::nullopt, trials, gseed});
    }
    MatroidOracle operator()(const SymCompletion& s) const {
      return generic::mc_oracle(generic::GenericKind::SymPower,
                                generic::PowerConfig{s.n, s.n - s.d, 0, std::nullopt, trials, gseed});
    }
  };
  const MatroidOracle gen = std::visit(Visitor{trials, gseed}, family);
  const MatroidOracle dual_rig = matroid::dual(rig);
  const auto eq = matroid::matroids_equal(dual_rig, gen, mode);
  DualityReport rep;
  rep.rigidity_name = rig.name();
  rep.generic_name = gen.name();
  rep.equal = eq.equal;
  rep.exhaustive = std::holds_alternative<matroid::Exhaustive>(mode);
  if (eq.witness) rep.witness = EdgeSet(rig.ground(), *eq.witness);
  rep.rank_dual_rigidity = dual_rig.total_rank();
  rep.rank_generic = gen.total_rank();
  rep.witness_rank_dual = eq.rank_a;
  rep.witness_rank_generic = eq.rank_b;
  rep.subsets_checked = eq.subsets_checked;
  rep.certainty = eq.certainty;
  return rep;
}

}  // namespace rigidmat::rigidity

#endif  // RIGIDMAT_RIGIDITY_RIGIDITY_HPP
