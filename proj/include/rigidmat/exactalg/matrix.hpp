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

#ifndef RIGIDMAT_EXACTALG_MATRIX_HPP
#define RIGIDMAT_EXACTALG_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <variant>
#include <vector>

#include "rigidmat/errors.hpp"
#include "rigidmat/exactalg/field_spec.hpp"

namespace rigidmat::exactalg {

/// Dense row-major matrix over an exact field.
template <class Field>
class DenseMatrix {
 public:
  using FieldType = Field;
  using Element = typename Field::Element;

  DenseMatrix(Field field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), entries_(rows * cols, field_.zero()) {}

  DenseMatrix(Field field, std::size_t rows, std::size_t cols, std::vector<Element> entries)
      : field_(std::move(field)), rows_(rows), cols_(cols), entries_(std::move(entries)) {
    require(entries_.size() == rows_ * cols_, "DenseMatrix: entry count must equal rows * cols");
  }

  /// Build from small integers, row by row.
  static DenseMatrix from_ints(Field field, const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    DenseMatrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      require(rows[i].size() == c, "DenseMatrix::from_ints: ragged rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = m.field_.from_int(rows[i][j]);
    }
    return m;
  }

  static DenseMatrix identity(Field field, std::size_t n) {
    DenseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Element>& entries() const { return entries_; }

  const Element& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  Element& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }

  std::vector<Element> column(std::size_t j) const {
    require(j < cols_, "DenseMatrix::column: index out of range");
    std::vector<Element> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }

  DenseMatrix transposed() const {
    DenseMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

/// A matrix over any supported field.
using Matrix = std::variant<DenseMatrix<PrimeField>, DenseMatrix<ExtensionField>, DenseMatrix<RationalField>>;

/// Zero matrix over the field named by spec.
inline Matrix make_matrix(const FieldSpec& spec, std::size_t rows, std::size_t cols) {
  return std::visit([&](auto&& field) -> Matrix { return DenseMatrix(field, rows, cols); }, field_ops(spec));
}

inline std::size_t rows(const Matrix& m) {
  return std::visit([](const auto& x) { return x.rows(); }, m);
}
inline std::size_t cols(const Matrix& m) {
  return std::visit([](const auto& x) { return x.cols(); }, m);
}

}  // namespace rigidmat::exactalg

#endif  // RIGIDMAT_EXACTALG_MATRIX_HPP
