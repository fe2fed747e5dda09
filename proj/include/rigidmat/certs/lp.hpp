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

#ifndef RIGIDMAT_CERTS_LP_HPP
#define RIGIDMAT_CERTS_LP_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "rigidmat/errors.hpp"

namespace rigidmat::certs {

enum class Relation { Greater, GreaterEq, Equal, LessEq, Less };

/// coeffs . x  (relation)  rhs
struct LinearRow {
  std::vector<mpq_class> coeffs;
  Relation rel = Relation::GreaterEq;
  mpq_class rhs = 0;
};

struct LinearSystem {
  std::size_t num_vars = 0;
  std::vector<LinearRow> rows;

  void add(std::vector<mpq_class> coeffs, Relation rel, mpq_class rhs = 0) {
    require(coeffs.size() == num_vars, "LinearSystem::add: coefficient count must equal num_vars");
    rows.push_back({std::move(coeffs), rel, std::move(rhs)});
  }
};

inline bool satisfies(const LinearSystem& sys, const std::vector<mpq_class>& x) {
  for (const auto& row : sys.rows) {
    mpq_class lhs = 0;
    for (std::size_t j = 0; j < sys.num_vars; ++j) lhs += row.coeffs[j] * x[j];
    bool ok = false;
    switch (row.rel) {
      case Relation::Greater: ok = lhs > row.rhs; break;
      case Relation::GreaterEq: ok = lhs >= row.rhs; break;
      case Relation::Equal: ok = lhs == row.rhs; break;
      case Relation::LessEq: ok = lhs <= row.rhs; break;
      case Relation::Less: ok = lhs < row.rhs; break;
    }
    if (!ok) return false;
  }
  return true;
}

namespace detail {

/// Dense tableau simplex over Q with Bland's rule, for
///   maximize c.y  subject to  A y = b, y >= 0, b >= 0.
/// Two phases; returns nullopt when infeasible. The objective of the margin
/// reformulation is bounded, so unboundedness is reported as an error.
class Simplex {
 public:
  Simplex(std::vector<std::vector<mpq_class>> a, std::vector<mpq_class> b, std::vector<mpq_class> c)
      : rows_(a.size()), vars_(c.size()) {
    // Columns: structural 0..vars-1, artificial vars..vars+rows-1, then rhs.
    width_ = vars_ + rows_ + 1;
    t_.assign(rows_ + 1, std::vector<mpq_class>(width_, 0));
    basis_.resize(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < vars_; ++j) t_[i][j] = a[i][j];
      t_[i][vars_ + i] = 1;
      t_[i][width_ - 1] = b[i];
      basis_[i] = vars_ + i;
    }
    cost_ = std::move(c);
  }

  std::optional<std::vector<mpq_class>> solve() {
    // Phase one: minimize the sum of artificials, i.e. maximize -sum.
    std::vector<mpq_class> phase1(vars_ + rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) phase1[vars_ + i] = -1;
    load_objective(phase1);
    run(vars_ + rows_);
    if (sgn(t_[rows_][width_ - 1]) != 0) return std::nullopt;
    // Drive remaining artificials out of the basis where possible.
    for (std::size_t i = 0; i < rows_; ++i) {
      if (basis_[i] < vars_) continue;
      for (std::size_t j = 0; j < vars_; ++j)
        if (sgn(t_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
    }
    std::vector<mpq_class> phase2(vars_ + rows_, 0);
    for (std::size_t j = 0; j < vars_; ++j) phase2[j] = cost_[j];
    load_objective(phase2);
    run(vars_);
    std::vector<mpq_class> y(vars_, 0);
    for (std::size_t i = 0; i < rows_; ++i)
      if (basis_[i] < vars_) y[basis_[i]] = t_[i][width_ - 1];
    return y;
  }

 private:
  // Objective row holds reduced costs r_j = c_B B^-1 A_j - c_j and the value.
  void load_objective(const std::vector<mpq_class>& c) {
    auto& z = t_[rows_];
    for (std::size_t j = 0; j < width_; ++j) z[j] = 0;
    for (std::size_t j = 0; j + 1 < width_; ++j) z[j] = -c[j];
    for (std::size_t i = 0; i < rows_; ++i) {
      const mpq_class& cb = c[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < width_; ++j) z[j] += cb * t_[i][j];
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    const mpq_class p = t_[r][col];
    for (auto& v : t_[r]) v /= p;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r || sgn(t_[i][col]) == 0) continue;
      const mpq_class f = t_[i][col];
      for (std::size_t j = 0; j < width_; ++j)
        if (sgn(t_[r][j]) != 0) t_[i][j] -= f * t_[r][j];
    }
    basis_[r] = col;
  }

  // Columns >= allowed may not enter.
  void run(std::size_t allowed) {
    while (true) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j)
        if (sgn(t_[rows_][j]) < 0) {
          enter = j;
          break;
        }
      if (enter == allowed) return;
      std::size_t leave = rows_;
      mpq_class best;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (sgn(t_[i][enter]) <= 0) continue;
        mpq_class ratio = t_[i][width_ - 1] / t_[i][enter];
        if (leave == rows_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == rows_) throw Error("simplex: objective unbounded");
      pivot(leave, enter);
    }
  }

  std::size_t rows_;
  std::size_t vars_;
  std::size_t width_ = 0;
  std::vector<std::vector<mpq_class>> t_;
  std::vector<std::size_t> basis_;
  std::vector<mpq_class> cost_;
};

}  // namespace detail

struct LpResult {
  /// Optimal margin; strictly feasible iff positive.
  mpq_class margin = 0;
  std::optional<std::vector<mpq_class>> point;
};

/// Decides strict feasibility of a mixed system of strict and non-strict
/// rows exactly. Adds a margin t <= 1 to every strict row (a.x - t >= b for
/// '>', a.x + t <= b for '<'), maximizes t, and reports a point iff t* > 0.
/// Variables are free (split as x+ - x-).
inline LpResult lp_strict_feasible_detail(const LinearSystem& sys) {
  const std::size_t n = sys.num_vars;
  // Structural variables: x+ (n), x- (n), t, then one slack per inequality row.
  std::size_t slacks = 0;
  for (const auto& row : sys.rows)
    if (row.rel != Relation::Equal) ++slacks;
  const std::size_t t_col = 2 * n;
  const std::size_t vars = 2 * n + 1 + slacks + 1;  // +1 slack for t <= 1
  std::vector<std::vector<mpq_class>> a;
  std::vector<mpq_class> b;
  std::size_t slack = 2 * n + 1;
  auto emit = [&](std::vector<mpq_class> row, mpq_class rhs) {
    if (sgn(rhs) < 0) {
      for (auto& v : row) v = -v;
      rhs = -rhs;
    }
    a.push_back(std::move(row));
    b.push_back(std::move(rhs));
  };
  for (const auto& r : sys.rows) {
    std::vector<mpq_class> row(vars, 0);
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = r.coeffs[j];
      row[n + j] = -r.coeffs[j];
    }
    switch (r.rel) {
      case Relation::Greater:  // a.x - t - s = b
        row[t_col] = -1;
        row[slack++] = -1;
        break;
      case Relation::GreaterEq:
        row[slack++] = -1;
        break;
      case Relation::Equal:
        break;
      case Relation::LessEq:
        row[slack++] = 1;
        break;
      case Relation::Less:  // a.x + t + s = b
        row[t_col] = 1;
        row[slack++] = 1;
        break;
    }
    emit(std::move(row), r.rhs);
  }
  {
    std::vector<mpq_class> row(vars, 0);
    row[t_col] = 1;
    row[vars - 1] = 1;
    emit(std::move(row), 1);
  }
  std::vector<mpq_class> cost(vars, 0);
  cost[t_col] = 1;
  detail::Simplex simplex(std::move(a), std::move(b), std::move(cost));
  auto y = simplex.solve();
  LpResult out;
  if (!y) {
    out.margin = -1;
    return out;
  }
  out.margin = (*y)[t_col];
  if (sgn(out.margin) > 0) {
    std::vector<mpq_class> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = (*y)[j] - (*y)[n + j];
    out.point = std::move(x);
  }
  return out;
}

inline std::optional<std::vector<mpq_class>> lp_strict_feasible(const LinearSystem& sys) {
  return lp_strict_feasible_detail(sys).point;
}

}  // namespace rigidmat::certs

#endif  // RIGIDMAT_CERTS_LP_HPP
