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

#ifndef RIGIDMAT_CERTS_BERNSTEIN_HPP
#define RIGIDMAT_CERTS_BERNSTEIN_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rigidmat/certs/orientation.hpp"

namespace rigidmat::certs {

/// No directed cycle and no alternating cycle. A true verdict certifies
/// independence in B_{m,n}(2,2).
inline bool verify_bernstein(const Orientation& o) {
  return !has_directed_cycle(o) && !has_alternating_cycle(o);
}

enum class SearchStatus { Found, CertifiedNone, BudgetExceeded };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::CertifiedNone: return "certified-none";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

template <class T>
struct SearchResult {
  SearchStatus status = SearchStatus::CertifiedNone;
  std::optional<T> value;
  std::uint64_t nodes = 0;
  std::string note;

  bool found() const { return status == SearchStatus::Found; }
};

inline constexpr int kMaxBernsteinEdges = 24;
inline constexpr std::uint64_t kDefaultNodeBudget = std::uint64_t{1} << 28;

/// Union-find without path compression, so unions can be undone.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
    for (int i = 0; i < n; ++i) parent_[static_cast<std::size_t>(i)] = i;
  }
  int find(int x) const {
    while (parent_[static_cast<std::size_t>(x)] != x) x = parent_[static_cast<std::size_t>(x)];
    return x;
  }
  /// False (and no change recorded) when already connected.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    history_.push_back(b);
    return true;
  }
  void undo() {
    const int b = history_.back();
    history_.pop_back();
    const int a = parent_[static_cast<std::size_t>(b)];
    size_[static_cast<std::size_t>(a)] -= size_[static_cast<std::size_t>(b)];
    parent_[static_cast<std::size_t>(b)] = b;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<int> history_;
};

/// Edge indices ordered so every edge after the first in a component
/// touches an earlier vertex; cycles then close as early as possible.
inline std::vector<int> closing_order(const BipartiteGraph& g) {
  const Incidence inc(g);
  const int ne = g.num_edges();
  std::vector<int> order;
  std::vector<bool> used(static_cast<std::size_t>(ne), false), seen(static_cast<std::size_t>(g.num_vertices()), false);
  for (int s = 0; s < g.num_vertices(); ++s) {
    if (seen[static_cast<std::size_t>(s)] || inc.adj[static_cast<std::size_t>(s)].empty()) continue;
    std::vector<int> queue{s};
    seen[static_cast<std::size_t>(s)] = true;
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const auto& [w, e] : inc.adj[static_cast<std::size_t>(queue[q])]) {
        if (!used[static_cast<std::size_t>(e)]) {
          used[static_cast<std::size_t>(e)] = true;
          order.push_back(e);
        }
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = true;
          queue.push_back(w);
        }
      }
  }
  return order;
}

namespace detail {

struct BernsteinSearch {
  const BipartiteGraph& g;
  std::vector<BipartiteEdge> es;
  std::vector<int> order;
  std::vector<Dir> dirs;
  // One forest per orientation class; out-neighbor masks for the digraph.
  RollbackUnionFind forest[2];
  std::vector<std::uint64_t> out;
  std::uint64_t nodes = 0;
  std::uint64_t budget;
  bool exhausted = false;

  bool reaches(int from, int to) const {
    std::uint64_t seen = std::uint64_t{1} << from, frontier = seen;
    while (frontier) {
      const int v = std::countr_zero(frontier);
      frontier &= frontier - 1;
      const std::uint64_t next = out[static_cast<std::size_t>(v)] & ~seen;
      if (next >> to & 1) return true;
      seen |= next;
      frontier |= next;
    }
    return from == to;
  }

  bool run(std::size_t level) {
    if (level == order.size()) return true;
    if (++nodes > budget) {
      exhausted = true;
      return false;
    }
    const int k = order[level];
    const int u = g.row_vertex(es[static_cast<std::size_t>(k)].row);
    const int v = g.col_vertex(es[static_cast<std::size_t>(k)].col);
    for (int c = 0; c < 2; ++c) {
      // Reversing every edge maps valid orientations to valid ones.
      if (level == 0 && c == 1) break;
      const int tail = c == 0 ? u : v, head = c == 0 ? v : u;
      if (reaches(head, tail)) continue;
      if (!forest[c].unite(u, v)) continue;
      out[static_cast<std::size_t>(tail)] |= std::uint64_t{1} << head;
      dirs[static_cast<std::size_t>(k)] = c == 0 ? Dir::LeftToRight : Dir::RightToLeft;
      if (run(level + 1)) return true;
      out[static_cast<std::size_t>(tail)] &= ~(std::uint64_t{1} << head);
      forest[c].undo();
      if (exhausted) return false;
    }
    return false;
  }
};

}  // namespace detail

/// Exhaustive backtracking over orientations with incremental pruning on
/// directed cycles and monochromatic class cycles. CertifiedNone is a proof
/// of nonexistence; BudgetExceeded is reported for more than 24 edges or
/// when the node budget runs out.
inline SearchResult<Orientation> search_bernstein(const BipartiteGraph& g, std::uint64_t node_budget = kDefaultNodeBudget) {
  SearchResult<Orientation> res;
  if (g.num_edges() > kMaxBernsteinEdges) {
    res.status = SearchStatus::BudgetExceeded;
    res.note = std::to_string(g.num_edges()) + " edges exceeds the search cap of " + std::to_string(kMaxBernsteinEdges);
    return res;
  }
  const int nv = g.num_vertices();
  require(nv <= 64, "search_bernstein: at most 64 vertices");
  detail::BernsteinSearch s{g,
                            g.edges(),
                            closing_order(g),
                            std::vector<Dir>(static_cast<std::size_t>(g.num_edges()), Dir::LeftToRight),
                            {RollbackUnionFind(nv), RollbackUnionFind(nv)},
                            std::vector<std::uint64_t>(static_cast<std::size_t>(nv), 0),
                            0,
                            node_budget};
  const bool ok = s.run(0);
  res.nodes = s.nodes;
  if (ok) {
    Orientation o(g, s.dirs);
    if (!verify_bernstein(o)) throw Error("search_bernstein: produced an orientation that fails verification");
    res.status = SearchStatus::Found;
    res.value = std::move(o);
  } else if (s.exhausted) {
    res.status = SearchStatus::BudgetExceeded;
    res.note = "node budget of " + std::to_string(node_budget) + " exhausted";
  }
  return res;
}

}  // namespace rigidmat::certs

#endif  // RIGIDMAT_CERTS_BERNSTEIN_HPP
