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

#ifndef RIGIDMAT_EXACTALG_RANK_TABLE_HPP
#define RIGIDMAT_EXACTALG_RANK_TABLE_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "rigidmat/errors.hpp"
#include "rigidmat/exactalg/rank.hpp"

namespace rigidmat::exactalg {

/// Largest support a rank table may range over (2^26 one-byte entries).
inline constexpr int kMaxTableSupport = 26;

/// Row-echelon basis that supports push/pop of column vectors, for
/// depth-first sweeps over subsets.
template <class Field>
class IncrementalBasis {
 public:
  using Element = typename Field::Element;

  IncrementalBasis(Field field, std::size_t dim)
      : field_(std::move(field)), dim_(dim), store_(dim * (dim + 1), field_.zero()) {}

  std::size_t rank() const { return pivots_.size(); }
  std::size_t dim() const { return dim_; }

  /// Reduces v against the basis; appends it when independent. Returns
  /// whether the rank grew. Every call must be matched by pop().
  bool push(const std::vector<Element>& v) {
    // Slot rank() is scratch space until the vector is accepted.
    Element* w = &store_[pivots_.size() * dim_];
    std::copy(v.begin(), v.end(), w);
    for (std::size_t b = 0; b < pivots_.size(); ++b) {
      const std::size_t p = pivots_[b];
      if (field_.is_zero(w[p])) continue;
      const Element factor = w[p];
      const Element* u = &store_[b * dim_];
      for (std::size_t i = p; i < dim_; ++i) {
        if (!field_.is_zero(u[i])) w[i] = field_.sub(w[i], field_.mul(factor, u[i]));
      }
    }
    std::size_t p = 0;
    while (p < dim_ && field_.is_zero(w[p])) ++p;
    if (p == dim_) {
      grew_.push_back(false);
      return false;
    }
    const Element s = field_.inv(w[p]);
    for (std::size_t i = p; i < dim_; ++i) w[i] = field_.mul(w[i], s);
    pivots_.push_back(p);
    grew_.push_back(true);
    return true;
  }

  void pop() {
    if (grew_.back()) pivots_.pop_back();
    grew_.pop_back();
  }

 private:
  Field field_;
  std::size_t dim_;
  std::vector<Element> store_;
  std::vector<std::size_t> pivots_;
  std::vector<bool> grew_;
};

/// Bit positions of a mask, ascending.
inline std::vector<std::size_t> mask_bits(std::uint64_t mask) {
  std::vector<std::size_t> out;
  while (mask) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return out;
}

namespace detail {

template <class Field>
struct TableSweep {
  const DenseMatrix<Field>& m;
  const std::vector<std::vector<typename Field::Element>>& cols;
  IncrementalBasis<Field>& basis;
  std::vector<std::uint8_t>& table;
  std::size_t k;

  void fill_saturated(std::uint64_t x, std::size_t start, std::uint8_t value) {
    const std::uint64_t free_bits = k - start;
    for (std::uint64_t t = 0; t < (std::uint64_t{1} << free_bits); ++t) table[x | (t << start)] = value;
  }

  void run(std::uint64_t x, std::size_t start) {
    const auto r = static_cast<std::uint8_t>(basis.rank());
    if (basis.rank() == basis.dim()) {
      fill_saturated(x, start, r);
      return;
    }
    table[x] = r;
    for (std::size_t j = start; j < k; ++j) {
      basis.push(cols[j]);
      run(x | (std::uint64_t{1} << j), j + 1);
      basis.pop();
    }
  }
};

template <class Field>
std::vector<std::uint8_t> sweep_table(const DenseMatrix<Field>& m, std::uint64_t base, std::uint64_t support) {
  const auto base_idx = mask_bits(base);
  const auto sup_idx = mask_bits(support);
  const std::size_t k = sup_idx.size();
  std::vector<std::vector<typename Field::Element>> cols;
  cols.reserve(k);
  for (std::size_t c : sup_idx) cols.push_back(m.column(c));
  IncrementalBasis<Field> basis(m.field(), m.rows());
  for (std::size_t c : base_idx) basis.push(m.column(c));
  std::vector<std::uint8_t> table(std::size_t{1} << k);
  TableSweep<Field> sweep{m, cols, basis, table, k};
  sweep.run(0, 0);
  return table;
}

/// Columns of a rational matrix scaled to integers and reduced mod 2^61 - 1.
inline DenseMatrix<PrimeField> modular_image(const DenseMatrix<RationalField>& m) {
  std::vector<std::size_t> all(m.cols());
  std::iota(all.begin(), all.end(), std::size_t{0});
  const auto ints = integer_columns(m, all);
  DenseMatrix<PrimeField> out(mersenne_field(), m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = reduce_mod(ints[i * m.cols() + j], kMersenne61);
  return out;
}

inline std::size_t rational_rank_of(const DenseMatrix<RationalField>& m, const std::vector<std::size_t>& cols) {
  return mat_rank_of_columns(m, std::span<const std::size_t>(cols));
}

/// Exact table over Q. The modular table is a pointwise lower bound; it is
/// exact once the base ranks agree and every modular circuit of the
/// contraction is also dependent over Q. Otherwise falls back to per-subset
/// exact ranks.
inline std::vector<std::uint8_t> rational_table(const DenseMatrix<RationalField>& m, std::uint64_t base,
                                                std::uint64_t support) {
  const auto image = modular_image(m);
  auto table = sweep_table(image, base, support);
  const auto base_idx = mask_bits(base);
  const auto sup_idx = mask_bits(support);
  const std::size_t k = sup_idx.size();

  // A modular pivot basis of the base is independent over Q as well.
  std::vector<std::size_t> base_basis;
  {
    IncrementalBasis<PrimeField> b(image.field(), image.rows());
    for (std::size_t c : base_idx)
      if (b.push(image.column(c))) base_basis.push_back(c);
  }
  bool exact = rational_rank_of(m, base_idx) == base_basis.size();
  // With the top rank confirmed over Q, a spanning circuit is dependent over
  // Q by counting, so only non-spanning circuits need a Q check.
  std::vector<std::size_t> cols = base_idx;
  cols.insert(cols.end(), sup_idx.begin(), sup_idx.end());
  const std::uint8_t top = table.back();
  exact = exact && rational_rank_of(m, cols) == top;

  const std::uint8_t r0 = table[0];
  for (std::uint64_t x = 1; exact && x < table.size(); ++x) {
    const int size = std::popcount(x);
    if (table[x] != r0 + size - 1 || table[x] == top) continue;
    bool minimal = true;
    for (std::uint64_t y = x; y && minimal; y &= y - 1) {
      const std::uint64_t e = y & (~y + 1);
      minimal = table[x ^ e] == r0 + size - 1;
    }
    if (!minimal) continue;
    cols = base_basis;
    for (std::uint64_t y = x; y; y &= y - 1) cols.push_back(sup_idx[static_cast<std::size_t>(std::countr_zero(y))]);
    if (rational_rank_of(m, cols) == cols.size()) exact = false;
  }
  if (exact) return table;

  for (std::uint64_t x = 0; x < table.size(); ++x) {
    cols = base_idx;
    for (std::size_t j = 0; j < k; ++j)
      if (x >> j & 1) cols.push_back(sup_idx[j]);
    table[x] = static_cast<std::uint8_t>(rational_rank_of(m, cols));
  }
  return table;
}

}  // namespace detail

/// table[x] = rank(base ∪ {support bit j : bit j of x set}) for every
/// x < 2^|support|, where bit j of x names the j-th lowest column of support.
template <class Field>
std::vector<std::uint8_t> column_rank_table(const DenseMatrix<Field>& m, std::uint64_t base, std::uint64_t support) {
  require((base & support) == 0, "column_rank_table: base and support overlap");
  require(m.cols() >= 64 || ((base | support) >> m.cols()) == 0, "column_rank_table: column index out of range");
  if (std::popcount(support) > kMaxTableSupport) {
    throw BudgetExceeded("column_rank_table: support of " + std::to_string(std::popcount(support)) +
                         " elements exceeds the table cap of " + std::to_string(kMaxTableSupport));
  }
  if constexpr (std::is_same_v<Field, RationalField>) {
    return detail::rational_table(m, base, support);
  } else {
    return detail::sweep_table(m, base, support);
  }
}

inline std::vector<std::uint8_t> column_rank_table(const Matrix& m, std::uint64_t base, std::uint64_t support) {
  return std::visit([&](const auto& x) { return column_rank_table(x, base, support); }, m);
}

}  // namespace rigidmat::exactalg

#endif  // RIGIDMAT_EXACTALG_RANK_TABLE_HPP
