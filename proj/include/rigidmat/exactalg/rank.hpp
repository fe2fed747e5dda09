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

#ifndef RIGIDMAT_EXACTALG_RANK_HPP
#define RIGIDMAT_EXACTALG_RANK_HPP

#include <gmpxx.h>

#include <algorithm>
#include <numeric>
#include <span>
#include <type_traits>
#include <vector>

#include "rigidmat/errors.hpp"
#include "rigidmat/exactalg/matrix.hpp"

namespace rigidmat::exactalg {

/// Row echelon reduction in place; returns the rank. a is rows x cols, row-major.
template <class Field>
std::size_t eliminate(const Field& f, std::vector<typename Field::Element>& a, std::size_t rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && f.is_zero(a[piv * cols + c])) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    }
    const auto pivot_inv = f.inv(a[r * cols + c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (f.is_zero(a[i * cols + c])) continue;
      const auto factor = f.mul(a[i * cols + c], pivot_inv);
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] = f.sub(a[i * cols + j], f.mul(factor, a[r * cols + j]));
    }
    ++r;
  }
  return r;
}

/// Fraction-free (Bareiss) elimination over Z; returns the rank over Q.
/// Every intermediate entry is a minor of the input, so the divisions are exact.
inline std::size_t bareiss_rank(std::vector<mpz_class> a, std::size_t rows, std::size_t cols) {
  mpz_class prev = 1;
  mpz_class t;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a[piv * cols + c]) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    }
    const mpz_class& p = a[r * cols + c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      mpz_class& lead = a[i * cols + c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class& x = a[i * cols + j];
        mpz_mul(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
        mpz_mul(t.get_mpz_t(), lead.get_mpz_t(), a[r * cols + j].get_mpz_t());
        mpz_sub(x.get_mpz_t(), x.get_mpz_t(), t.get_mpz_t());
        mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), prev.get_mpz_t());
      }
      lead = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

namespace detail {

inline const PrimeField& mersenne_field() {
  static const PrimeField field(kMersenne61);
  return field;
}

/// Selected columns of a rational matrix, each scaled by the lcm of its
/// denominators (column scaling preserves the column matroid). Row-major,
/// rows x cols.size().
inline std::vector<mpz_class> integer_columns(const DenseMatrix<RationalField>& m, std::span<const std::size_t> cols) {
  const std::size_t k = cols.size();
  std::vector<mpz_class> out(m.rows() * k);
  for (std::size_t c = 0; c < k; ++c) {
    mpz_class scale = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, cols[c]).get_den_mpz_t());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      const mpq_class& q = m(i, cols[c]);
      mpz_class v = scale / q.get_den();
      out[i * k + c] = v * q.get_num();
    }
  }
  return out;
}

inline std::uint64_t reduce_mod(const mpz_class& z, std::uint64_t p) {
  return mpz_fdiv_ui(z.get_mpz_t(), p);
}

/// Rank of an integer matrix modulo 2^61 - 1; a lower bound for the rank over Q.
inline std::size_t modular_rank(const std::vector<mpz_class>& a, std::size_t rows, std::size_t cols) {
  const auto& f = mersenne_field();
  std::vector<std::uint64_t> red(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) red[i] = reduce_mod(a[i], kMersenne61);
  return eliminate(f, red, rows, cols);
}

/// Exact rank over Q of an integer matrix. The modular rank is a certified
/// lower bound; Bareiss runs only when that bound is below min(rows, cols).
inline std::size_t integer_rank(const std::vector<mpz_class>& a, std::size_t rows, std::size_t cols) {
  const std::size_t cap = std::min(rows, cols);
  if (cap == 0) return 0;
  if (modular_rank(a, rows, cols) == cap) return cap;
  return bareiss_rank(a, rows, cols);
}

}  // namespace detail

/// Rank of the submatrix on the given columns.
template <class Field>
std::size_t mat_rank_of_columns(const DenseMatrix<Field>& m, std::span<const std::size_t> cols) {
  for (std::size_t c : cols) require(c < m.cols(), "mat_rank_of_columns: column index out of range");
  const std::size_t rows = m.rows();
  const std::size_t k = cols.size();
  if (rows == 0 || k == 0) return 0;
  if constexpr (std::is_same_v<Field, RationalField>) {
    return detail::integer_rank(detail::integer_columns(m, cols), rows, k);
  } else {
    std::vector<typename Field::Element> a;
    a.reserve(rows * k);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t c : cols) a.push_back(m(i, c));
    return eliminate(m.field(), a, rows, k);
  }
}

template <class Field>
std::size_t mat_rank(const DenseMatrix<Field>& m) {
  std::vector<std::size_t> all(m.cols());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return mat_rank_of_columns(m, all);
}

inline std::size_t mat_rank(const Matrix& m) {
  return std::visit([](const auto& x) { return mat_rank(x); }, m);
}

inline std::size_t mat_rank_of_columns(const Matrix& m, std::span<const std::size_t> cols) {
  return std::visit([&](const auto& x) { return mat_rank_of_columns(x, cols); }, m);
}

}  // namespace rigidmat::exactalg

#endif  // RIGIDMAT_EXACTALG_RANK_HPP
