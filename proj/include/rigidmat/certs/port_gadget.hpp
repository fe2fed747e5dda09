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

#ifndef RIGIDMAT_CERTS_PORT_GADGET_HPP
#define RIGIDMAT_CERTS_PORT_GADGET_HPP

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include <optional>
#include <vector>

#include "rigidmat/certs/orientation.hpp"

namespace rigidmat::certs {

/// Cycles whose consecutive edges alternate in orientation class, found by
/// general matching. Vertex v becomes ports 2v (class LeftToRight) and
/// 2v+1 (class RightToLeft) joined by a port edge; an edge of class c joins
/// the class-c ports of its ends. Such a cycle exists iff the gadget has a
/// perfect matching other than the port matching M0, and the symmetric
/// difference with M0 then contains it. Each graph edge is forced in turn by
/// deleting its two ports and asking for a perfect matching of the rest.
inline std::optional<Cycle> find_class_alternating_cycle(const Orientation& o) {
  using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
  using Vertex = boost::graph_traits<Graph>::vertex_descriptor;
  const int nv = o.graph.num_vertices();
  const int np = 2 * nv;
  const auto es = o.graph.edges();
  std::vector<std::pair<int, int>> links;
  for (std::size_t k = 0; k < es.size(); ++k) {
    const int c = o.dirs[k] == Dir::LeftToRight ? 0 : 1;
    links.push_back({2 * o.graph.row_vertex(es[k].row) + c, 2 * o.graph.col_vertex(es[k].col) + c});
  }
  for (const auto& [x, y] : links) {
    Graph g(static_cast<std::size_t>(np));
    auto live = [&](int p) { return p != x && p != y; };
    for (int v = 0; v < nv; ++v)
      if (live(2 * v) && live(2 * v + 1)) boost::add_edge(static_cast<Vertex>(2 * v), static_cast<Vertex>(2 * v + 1), g);
    for (const auto& [p, q] : links)
      if (live(p) && live(q)) boost::add_edge(static_cast<Vertex>(p), static_cast<Vertex>(q), g);
    std::vector<Vertex> mate(static_cast<std::size_t>(np));
    boost::edmonds_maximum_cardinality_matching(g, &mate[0]);
    if (static_cast<int>(boost::matching_size(g, &mate[0])) != nv - 1) continue;
    const auto null = boost::graph_traits<Graph>::null_vertex();
    mate[static_cast<std::size_t>(x)] = static_cast<Vertex>(y);
    mate[static_cast<std::size_t>(y)] = static_cast<Vertex>(x);
    // Walk M and M0 edges alternately from x until the walk closes.
    Cycle c;
    int p = x;
    do {
      c.push_back(p / 2);
      const auto q = mate[static_cast<std::size_t>(p)];
      if (q == null) throw Error("find_class_alternating_cycle: matching is not perfect");
      p = static_cast<int>(q) ^ 1;
    } while (p != x);
    return c;
  }
  return std::nullopt;
}

}  // namespace rigidmat::certs

#endif  // RIGIDMAT_CERTS_PORT_GADGET_HPP
