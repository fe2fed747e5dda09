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

#ifndef RIGIDMAT_CERTS_D_BERNSTEIN_HPP
#define RIGIDMAT_CERTS_D_BERNSTEIN_HPP

#include <gmpxx.h>

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "rigidmat/certs/bernstein.hpp"
#include "rigidmat/certs/lp.hpp"
#include "rigidmat/certs/orientation.hpp"

namespace rigidmat::certs {

/// A color in [0, d) for each edge, in ascending cell order.
struct DColoring {
  BipartiteGraph graph;
  int d = 1;
  std::vector<int> colors;

  DColoring() = default;
  DColoring(BipartiteGraph g, int d_, std::vector<int> c) : graph(g), d(d_), colors(std::move(c)) {
    require(d >= 1, "DColoring: need d >= 1");
    require(colors.size() == static_cast<std::size_t>(graph.num_edges()), "DColoring: need exactly one color per edge");
    for (int x : colors) require(x >= 0 && x < d, "DColoring: color out of range");
  }

  /// Colors orientation classes: LeftToRight is color 0.
  static DColoring from_orientation(const Orientation& o) {
    std::vector<int> c;
    for (Dir x : o.dirs) c.push_back(x == Dir::LeftToRight ? 0 : 1);
    return DColoring(o.graph, 2, std::move(c));
  }

  std::string to_string() const {
    const auto es = graph.edges();
    std::string s;
    for (std::size_t k = 0; k < es.size(); ++k)
      s += (k ? ", " : "") + vertex_name(graph.m, graph.row_vertex(es[k].row)) +
           vertex_name(graph.m, graph.col_vertex(es[k].col)) + ":" + std::to_string(colors[k] + 1);
    return s;
  }
};

/// Vertex labels c(v) in Q^d, indexed by vertex id; each sums to zero.
struct LabelAssignment {
  int d = 1;
  std::vector<std::vector<mpq_class>> c;

  std::string to_string(int m) const {
    std::string s;
    for (std::size_t v = 0; v < c.size(); ++v) {
      s += (v ? "; " : "") + vertex_name(m, static_cast<int>(v)) + "=(";
      for (int i = 0; i < d; ++i) s += (i ? "," : "") + c[v][static_cast<std::size_t>(i)].get_str();
      s += ")";
    }
    return s;
  }
};

/// Each color class is a forest.
inline bool color_classes_are_forests(const DColoring& col) {
  const auto es = col.graph.edges();
  std::vector<RollbackUnionFind> uf(static_cast<std::size_t>(col.d), RollbackUnionFind(col.graph.num_vertices()));
  for (std::size_t k = 0; k < es.size(); ++k)
    if (!uf[static_cast<std::size_t>(col.colors[k])].unite(col.graph.row_vertex(es[k].row), col.graph.col_vertex(es[k].col)))
      return false;
  return true;
}

/// Direct exact check of zero sums and, for every edge (u,v) of color i and
/// every j != i, c_i(u) + c_i(v) > c_j(u) + c_j(v).
inline bool labels_satisfy(const DColoring& col, const LabelAssignment& lab) {
  if (lab.d != col.d || lab.c.size() != static_cast<std::size_t>(col.graph.num_vertices())) return false;
  for (const auto& cv : lab.c) {
    if (cv.size() != static_cast<std::size_t>(col.d)) return false;
    mpq_class sum = 0;
    for (const auto& x : cv) sum += x;
    if (sgn(sum) != 0) return false;
  }
  const auto es = col.graph.edges();
  for (std::size_t k = 0; k < es.size(); ++k) {
    const auto& cu = lab.c[static_cast<std::size_t>(col.graph.row_vertex(es[k].row))];
    const auto& cv = lab.c[static_cast<std::size_t>(col.graph.col_vertex(es[k].col))];
    const auto i = static_cast<std::size_t>(col.colors[k]);
    for (std::size_t j = 0; j < static_cast<std::size_t>(col.d); ++j)
      if (j != i && !(cu[i] + cv[i] > cu[j] + cv[j])) return false;
  }
  return true;
}

namespace detail {

/// Label feasibility for the first `count` edges of `order`. The zero-sum
/// condition eliminates c_d(v) = -(c_1(v) + ... + c_{d-1}(v)); the system
/// is homogeneous, so the margin bound t <= 1 replaces the box and the
/// solution is rescaled into [-1, 1] afterwards.
inline std::optional<LabelAssignment> solve_labels(const DColoring& col, const std::vector<int>& order, std::size_t count) {
  const int d = col.d;
  const int nv = col.graph.num_vertices();
  LabelAssignment lab{d, std::vector<std::vector<mpq_class>>(static_cast<std::size_t>(nv),
                                                             std::vector<mpq_class>(static_cast<std::size_t>(d), 0))};
  if (d == 1) return lab;
  const auto es = col.graph.edges();
  std::vector<int> slot(static_cast<std::size_t>(nv), -1);
  int used = 0;
  for (std::size_t q = 0; q < count; ++q) {
    const auto& e = es[static_cast<std::size_t>(order[q])];
    for (int v : {col.graph.row_vertex(e.row), col.graph.col_vertex(e.col)})
      if (slot[static_cast<std::size_t>(v)] < 0) slot[static_cast<std::size_t>(v)] = used++;
  }
  LinearSystem sys;
  sys.num_vars = static_cast<std::size_t>(used * (d - 1));
  // Coefficient of c_i(v) added into a row, i in [0, d).
  auto add_term = [&](std::vector<mpq_class>& row, int v, int i, int sign) {
    const int base = slot[static_cast<std::size_t>(v)] * (d - 1);
    if (i < d - 1) {
      row[static_cast<std::size_t>(base + i)] += sign;
    } else {
      for (int k = 0; k < d - 1; ++k) row[static_cast<std::size_t>(base + k)] -= sign;
    }
  };
  for (std::size_t q = 0; q < count; ++q) {
    const int k = order[q];
    const auto& e = es[static_cast<std::size_t>(k)];
    const int u = col.graph.row_vertex(e.row), v = col.graph.col_vertex(e.col);
    const int i = col.colors[static_cast<std::size_t>(k)];
    for (int j = 0; j < d; ++j) {
      if (j == i) continue;
      std::vector<mpq_class> row(sys.num_vars, 0);
      add_term(row, u, i, 1);
      add_term(row, v, i, 1);
      add_term(row, u, j, -1);
      add_term(row, v, j, -1);
      sys.add(std::move(row), Relation::Greater, 0);
    }
  }
  auto x = lp_strict_feasible(sys);
  if (!x) return std::nullopt;
  mpq_class scale = 0;
  for (int v = 0; v < nv; ++v) {
    const int s = slot[static_cast<std::size_t>(v)];
    if (s < 0) continue;
    mpq_class last = 0;
    for (int i = 0; i < d - 1; ++i) {
      const mpq_class& val = (*x)[static_cast<std::size_t>(s * (d - 1) + i)];
      lab.c[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] = val;
      last -= val;
    }
    lab.c[static_cast<std::size_t>(v)][static_cast<std::size_t>(d - 1)] = last;
    for (const auto& val : lab.c[static_cast<std::size_t>(v)]) scale = std::max(scale, mpq_class(abs(val)));
  }
  if (scale > 1)
    for (auto& cv : lab.c)
      for (auto& val : cv) val /= scale;
  return lab;
}

}  // namespace detail

/// Certificate check for a d-coloring: color classes are forests and the
/// label system is strictly feasible. The returned labels are re-checked
/// directly, independently of the LP.
inline std::optional<LabelAssignment> verify_d_bernstein(const DColoring& col) {
  if (!color_classes_are_forests(col)) return std::nullopt;
  std::vector<int> all(static_cast<std::size_t>(col.graph.num_edges()));
  std::iota(all.begin(), all.end(), 0);
  auto lab = detail::solve_labels(col, all, all.size());
  if (lab && !labels_satisfy(col, *lab)) throw Error("verify_d_bernstein: LP point fails the direct label check");
  return lab;
}

struct DBernsteinCertificate {
  DColoring coloring;
  LabelAssignment labels;
};

/// Search budget: at most 16 edges, or d^|E| <= 2^24.
inline bool d_bernstein_within_budget(int edges, int d) {
  return edges <= 16 || static_cast<double>(edges) * std::log2(static_cast<double>(std::max(d, 1))) <= 24.0;
}

namespace detail {

struct DBernsteinSearch {
  const BipartiteGraph& g;
  int d;
  std::vector<BipartiteEdge> es;
  std::vector<int> order;
  std::vector<int> colors;
  std::vector<RollbackUnionFind> forest;
  std::uint64_t nodes = 0;
  std::uint64_t budget;
  bool exhausted = false;
  std::optional<LabelAssignment> labels;

  bool run(std::size_t level, int colors_used) {
    if (level == order.size()) {
      DColoring col(g, d, colors);
      labels = verify_d_bernstein(col);
      return labels.has_value();
    }
    if (++nodes > budget) {
      exhausted = true;
      return false;
    }
    // A partial system is a subsystem of every completion.
    if (level > 0 && level % 4 == 0) {
      DColoring partial(g, d, colors);
      if (!solve_labels(partial, order, level)) return false;
    }
    const int k = order[level];
    const int u = g.row_vertex(es[static_cast<std::size_t>(k)].row);
    const int v = g.col_vertex(es[static_cast<std::size_t>(k)].col);
    // Colors are interchangeable, so a new edge opens at most one fresh color.
    const int limit = std::min(d, colors_used + 1);
    for (int c = 0; c < limit; ++c) {
      if (!forest[static_cast<std::size_t>(c)].unite(u, v)) continue;
      colors[static_cast<std::size_t>(k)] = c;
      if (run(level + 1, std::max(colors_used, c + 1))) return true;
      forest[static_cast<std::size_t>(c)].undo();
      if (exhausted) return false;
    }
    colors[static_cast<std::size_t>(k)] = 0;
    return false;
  }
};

}  // namespace detail

/// Exhaustive backtracking over d-colorings up to color permutation, pruned
/// on monochromatic cycles and on LP infeasibility every fourth level.
inline SearchResult<DBernsteinCertificate> search_d_bernstein(const BipartiteGraph& g, int d,
                                                              std::uint64_t node_budget = kDefaultNodeBudget) {
  require(d >= 1, "search_d_bernstein: need d >= 1");
  SearchResult<DBernsteinCertificate> res;
  if (!d_bernstein_within_budget(g.num_edges(), d)) {
    res.status = SearchStatus::BudgetExceeded;
    res.note = std::to_string(g.num_edges()) + " edges with d = " + std::to_string(d) +
               " exceeds the search cap (|E| <= 16 or d^|E| <= 2^24)";
    return res;
  }
  const int nv = g.num_vertices();
  detail::DBernsteinSearch s{g,
                             d,
                             g.edges(),
                             closing_order(g),
                             std::vector<int>(static_cast<std::size_t>(g.num_edges()), 0),
                             std::vector<RollbackUnionFind>(static_cast<std::size_t>(d), RollbackUnionFind(nv)),
                             0,
                             node_budget,
                             false,
                             std::nullopt};
  const bool ok = s.run(0, 0);
  res.nodes = s.nodes;
  if (ok) {
    res.status = SearchStatus::Found;
    res.value = DBernsteinCertificate{DColoring(g, d, s.colors), *s.labels};
  } else if (s.exhausted) {
    res.status = SearchStatus::BudgetExceeded;
    res.note = "node budget of " + std::to_string(node_budget) + " exhausted";
  }
  return res;
}

}  // namespace rigidmat::certs

#endif  // RIGIDMAT_CERTS_D_BERNSTEIN_HPP
