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

#ifndef RIGIDMAT_CERTS_ORIENTATION_HPP
#define RIGIDMAT_CERTS_ORIENTATION_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "rigidmat/errors.hpp"
#include "rigidmat/matroid/ground_set.hpp"

namespace rigidmat::certs {

/// Vertices of the bipartite graph on [m] ⊔ [n]: rows are 0..m-1, columns
/// are m..m+n-1. A cycle is reported as its vertex sequence, not closed.
using Cycle = std::vector<int>;

enum class Dir : std::uint8_t { LeftToRight, RightToLeft };

struct BipartiteEdge {
  int row = 0;
  int col = 0;
};

/// Bipartite graph given by a cell mask over the m x n grid (id i*n + j).
struct BipartiteGraph {
  int m = 0;
  int n = 0;
  matroid::Mask cells = 0;

  BipartiteGraph() = default;
  BipartiteGraph(int m_, int n_, matroid::Mask cells_) : m(m_), n(n_), cells(cells_) {
    require(m >= 0 && n >= 0 && m * n <= 64, "BipartiteGraph: need an m x n grid with at most 64 cells");
    require((cells & ~matroid::low_bits(static_cast<std::size_t>(m * n))) == 0, "BipartiteGraph: cell outside the grid");
  }
  static BipartiteGraph from_edge_set(const matroid::EdgeSet& e, int m, int n) {
    require(e.ground()->size() == static_cast<std::size_t>(m * n), "BipartiteGraph: edge set is not over an m x n grid");
    return BipartiteGraph(m, n, e.mask());
  }

  int num_vertices() const { return m + n; }
  int num_edges() const { return matroid::popcount(cells); }

  /// Edges in ascending cell id.
  std::vector<BipartiteEdge> edges() const {
    std::vector<BipartiteEdge> out;
    for (matroid::Mask x = cells; x; x &= x - 1) {
      const int id = std::countr_zero(x);
      out.push_back({id / n, id % n});
    }
    return out;
  }
  int row_vertex(int i) const { return i; }
  int col_vertex(int j) const { return m + j; }
};

inline std::string vertex_name(int m, int v) {
  return v < m ? "u" + std::to_string(v + 1) : "v" + std::to_string(v - m + 1);
}

inline std::string cycle_to_string(int m, const Cycle& c) {
  std::string s;
  for (std::size_t k = 0; k < c.size(); ++k) s += (k ? " " : "") + vertex_name(m, c[k]);
  return s;
}

/// A direction for each edge of a bipartite graph, in ascending cell order.
/// LeftToRight is [m] -> [n].
struct Orientation {
  BipartiteGraph graph;
  std::vector<Dir> dirs;

  Orientation() = default;
  Orientation(BipartiteGraph g, std::vector<Dir> d) : graph(g), dirs(std::move(d)) {
    require(dirs.size() == static_cast<std::size_t>(graph.num_edges()),
            "Orientation: need exactly one direction per edge");
  }

  /// Bit k of right_to_left set means edge k (ascending cell order) points [n] -> [m].
  static Orientation from_bits(BipartiteGraph g, std::uint64_t right_to_left) {
    std::vector<Dir> d(static_cast<std::size_t>(g.num_edges()));
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = (right_to_left >> k & 1) ? Dir::RightToLeft : Dir::LeftToRight;
    return Orientation(g, std::move(d));
  }

  struct Arc {
    int row = 0;
    int col = 0;
    Dir dir = Dir::LeftToRight;
  };

  /// From 0-based (row, col, direction) triples in any order.
  static Orientation from_arcs(int m, int n, const std::vector<Arc>& arcs) {
    matroid::Mask cells = 0;
    for (const auto& a : arcs) {
      require(a.row >= 0 && a.row < m && a.col >= 0 && a.col < n, "Orientation: edge outside the grid");
      const matroid::Mask bit = matroid::Mask{1} << (a.row * n + a.col);
      require(!(cells & bit), "Orientation: duplicate edge");
      cells |= bit;
    }
    BipartiteGraph g(m, n, cells);
    std::vector<Dir> d(arcs.size());
    for (const auto& a : arcs) {
      const matroid::Mask below = cells & ((matroid::Mask{1} << (a.row * n + a.col)) - 1);
      d[static_cast<std::size_t>(matroid::popcount(below))] = a.dir;
    }
    return Orientation(g, std::move(d));
  }

  /// Tail and head of edge k.
  std::pair<int, int> arc(std::size_t k, const BipartiteEdge& e) const {
    const int u = graph.row_vertex(e.row), v = graph.col_vertex(e.col);
    return dirs[k] == Dir::LeftToRight ? std::pair{u, v} : std::pair{v, u};
  }

  std::string to_string() const {
    const auto es = graph.edges();
    std::string s;
    for (std::size_t k = 0; k < es.size(); ++k) {
      const auto [t, h] = arc(k, es[k]);
      s += (k ? ", " : "") + vertex_name(graph.m, t) + "->" + vertex_name(graph.m, h);
    }
    return s;
  }
};

/// Incident (neighbor, edge index) lists.
struct Incidence {
  std::vector<std::vector<std::pair<int, int>>> adj;

  explicit Incidence(const BipartiteGraph& g) : adj(static_cast<std::size_t>(g.num_vertices())) {
    const auto es = g.edges();
    for (std::size_t k = 0; k < es.size(); ++k) {
      const int u = g.row_vertex(es[k].row), v = g.col_vertex(es[k].col);
      adj[static_cast<std::size_t>(u)].push_back({v, static_cast<int>(k)});
      adj[static_cast<std::size_t>(v)].push_back({u, static_cast<int>(k)});
    }
  }
};

/// A directed cycle, by depth-first search.
inline std::optional<Cycle> has_directed_cycle(const Orientation& o) {
  const int nv = o.graph.num_vertices();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(nv));
  const auto es = o.graph.edges();
  for (std::size_t k = 0; k < es.size(); ++k) {
    const auto [t, h] = o.arc(k, es[k]);
    out[static_cast<std::size_t>(t)].push_back(h);
  }
  std::vector<int> state(static_cast<std::size_t>(nv), 0), parent(static_cast<std::size_t>(nv), -1);
  for (int s = 0; s < nv; ++s) {
    if (state[static_cast<std::size_t>(s)]) continue;
    // Iterative DFS with explicit edge cursors.
    std::vector<std::pair<int, std::size_t>> stack{{s, 0}};
    state[static_cast<std::size_t>(s)] = 1;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& nbrs = out[static_cast<std::size_t>(v)];
      if (next == nbrs.size()) {
        state[static_cast<std::size_t>(v)] = 2;
        stack.pop_back();
        continue;
      }
      const int w = nbrs[next++];
      if (state[static_cast<std::size_t>(w)] == 1) {
        Cycle c{w};
        for (int x = v; x != w; x = parent[static_cast<std::size_t>(x)]) c.push_back(x);
        std::reverse(c.begin() + 1, c.end());
        return c;
      }
      if (state[static_cast<std::size_t>(w)] == 0) {
        state[static_cast<std::size_t>(w)] = 1;
        parent[static_cast<std::size_t>(w)] = v;
        stack.push_back({w, 0});
      }
    }
  }
  return std::nullopt;
}

/// Largest graph the exhaustive cycle enumeration accepts.
inline constexpr int kMaxCycleEnumerationEdges = 16;

enum class CycleKind {
  /// Edge directions alternate along the traversal: every vertex of the
  /// cycle is a source or a sink of it. In a bipartite graph this means all
  /// cycle edges share one orientation class.
  Alternating,
  /// Consecutive edges alternate in orientation class. In a bipartite
  /// graph these are exactly the directed cycles.
  ClassAlternating,
};

namespace detail {

/// Depth-first enumeration of simple cycles through their least vertex,
/// stopping at the first one accepted by the kind check.
struct CycleEnumerator {
  const Orientation& o;
  const Incidence& inc;
  CycleKind kind;
  std::vector<BipartiteEdge> es;
  std::vector<int> path;
  std::vector<int> path_edges;
  std::vector<bool> on_path;
  int start = 0;

  // forward = traversed tail to head.
  bool forward(int edge, int from) const {
    const auto [t, h] = o.arc(static_cast<std::size_t>(edge), es[static_cast<std::size_t>(edge)]);
    (void)h;
    return t == from;
  }
  bool accepts(const std::vector<int>& cyc_edges, const std::vector<int>& cyc) const {
    const std::size_t len = cyc_edges.size();
    for (std::size_t k = 0; k < len; ++k) {
      const int e1 = cyc_edges[k], e2 = cyc_edges[(k + 1) % len];
      if (kind == CycleKind::Alternating) {
        if (forward(e1, cyc[k]) == forward(e2, cyc[(k + 1) % len])) return false;
      } else {
        if (o.dirs[static_cast<std::size_t>(e1)] == o.dirs[static_cast<std::size_t>(e2)]) return false;
      }
    }
    return true;
  }

  bool extend(int v, std::optional<Cycle>& found) {
    for (const auto& [w, e] : inc.adj[static_cast<std::size_t>(v)]) {
      if (!path_edges.empty() && e == path_edges.back()) continue;
      if (w == start && path.size() >= 4) {
        path_edges.push_back(e);
        const bool ok = accepts(path_edges, path);
        path_edges.pop_back();
        if (ok) {
          found = path;
          return true;
        }
        continue;
      }
      if (w <= start || on_path[static_cast<std::size_t>(w)]) continue;
      path.push_back(w);
      path_edges.push_back(e);
      on_path[static_cast<std::size_t>(w)] = true;
      if (extend(w, found)) return true;
      on_path[static_cast<std::size_t>(w)] = false;
      path.pop_back();
      path_edges.pop_back();
    }
    return false;
  }
};

}  // namespace detail

/// Exhaustive simple-cycle enumeration (at most 16 edges) for a cycle of the
/// given kind.
inline std::optional<Cycle> find_cycle_by_enumeration(const Orientation& o, CycleKind kind) {
  if (o.graph.num_edges() > kMaxCycleEnumerationEdges) {
    throw BudgetExceeded("cycle enumeration: " + std::to_string(o.graph.num_edges()) + " edges exceeds the cap of " +
                         std::to_string(kMaxCycleEnumerationEdges));
  }
  const Incidence inc(o.graph);
  detail::CycleEnumerator en{o, inc, kind, o.graph.edges(), {}, {}, {}, 0};
  en.on_path.assign(static_cast<std::size_t>(o.graph.num_vertices()), false);
  std::optional<Cycle> found;
  for (int s = 0; s < o.graph.num_vertices(); ++s) {
    en.start = s;
    en.path = {s};
    en.path_edges.clear();
    if (en.extend(s, found)) return found;
  }
  return std::nullopt;
}

/// Reference detector for alternating cycles.
inline std::optional<Cycle> has_alternating_cycle_oracle(const Orientation& o) {
  return find_cycle_by_enumeration(o, CycleKind::Alternating);
}

/// Alternating cycles are the cycles inside one orientation class, so each
/// class is tested for being a forest with a union-find; the first edge
/// closing a cycle yields it via the forest path between its ends.
inline std::optional<Cycle> has_alternating_cycle(const Orientation& o) {
  const int nv = o.graph.num_vertices();
  const auto es = o.graph.edges();
  for (Dir cls : {Dir::LeftToRight, Dir::RightToLeft}) {
    std::vector<int> parent(static_cast<std::size_t>(nv));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      return x;
    };
    std::vector<std::vector<int>> forest(static_cast<std::size_t>(nv));
    for (std::size_t k = 0; k < es.size(); ++k) {
      if (o.dirs[k] != cls) continue;
      const int u = o.graph.row_vertex(es[k].row), v = o.graph.col_vertex(es[k].col);
      const int ru = find(u), rv = find(v);
      if (ru != rv) {
        parent[static_cast<std::size_t>(ru)] = rv;
        forest[static_cast<std::size_t>(u)].push_back(v);
        forest[static_cast<std::size_t>(v)].push_back(u);
        continue;
      }
      // Path v ... u in the forest, closed by the edge u - v.
      std::vector<int> prev(static_cast<std::size_t>(nv), -1);
      std::vector<int> queue{v};
      prev[static_cast<std::size_t>(v)] = v;
      for (std::size_t q = 0; q < queue.size(); ++q)
        for (int w : forest[static_cast<std::size_t>(queue[q])])
          if (prev[static_cast<std::size_t>(w)] < 0) {
            prev[static_cast<std::size_t>(w)] = queue[q];
            queue.push_back(w);
          }
      Cycle c;
      for (int x = u; x != v; x = prev[static_cast<std::size_t>(x)]) c.push_back(x);
      c.push_back(v);
      return c;
    }
  }
  return std::nullopt;
}

}  // namespace rigidmat::certs

#endif  // RIGIDMAT_CERTS_ORIENTATION_HPP
