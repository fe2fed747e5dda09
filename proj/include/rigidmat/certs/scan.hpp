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

#ifndef RIGIDMAT_CERTS_SCAN_HPP
#define RIGIDMAT_CERTS_SCAN_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <unordered_map>
#include <vector>

#include "rigidmat/certs/bernstein.hpp"
#include "rigidmat/certs/d_bernstein.hpp"

namespace rigidmat::certs {

/// All cell masks of an m x n grid with at most max_edges cells, by
/// increasing size and then increasing mask.
inline std::vector<matroid::Mask> grid_subgraphs(int m, int n, int max_edges) {
  require(m * n <= 30, "grid_subgraphs: at most 30 cells");
  std::vector<matroid::Mask> out;
  const matroid::Mask end = matroid::Mask{1} << (m * n);
  for (int k = 0; k <= max_edges; ++k)
    for (matroid::Mask x = 0; x < end; ++x)
      if (matroid::popcount(x) == k) out.push_back(x);
  return out;
}

struct ScanRecord {
  matroid::Mask cells = 0;
  SearchStatus status = SearchStatus::CertifiedNone;
  bool independent = false;
};

struct ScanSummary {
  std::size_t instances = 0;
  std::size_t independent = 0;
  std::size_t found = 0;
  std::size_t certified_none = 0;
  std::size_t budget = 0;
  /// Certificate found for a dependent set.
  std::size_t soundness_failures = 0;
  /// Independent set with certified nonexistence.
  std::size_t completeness_gaps = 0;
  std::vector<ScanRecord> records;
};

/// Certificate searches over a corpus that is closed under removing an edge
/// and ordered by size. A set inherits certified nonexistence from any
/// subset one edge smaller; otherwise the certificate of such a subset is
/// extended edge-wise before a full search. d = 0 selects Bernstein
/// orientations, d >= 1 d-Bernstein colorings.
inline ScanSummary scan_certificates(int m, int n, const std::vector<matroid::Mask>& corpus, int d,
                                     const std::function<bool(matroid::Mask)>& independent,
                                     std::uint64_t node_budget = kDefaultNodeBudget) {
  ScanSummary sum;
  std::unordered_map<matroid::Mask, std::optional<DColoring>> known;  // nullopt = certified none
  for (matroid::Mask x : corpus) {
    const BipartiteGraph g(m, n, x);
    ScanRecord rec{x, SearchStatus::CertifiedNone, independent(x)};
    bool decided = false;
    std::optional<DColoring> cert;
    for (matroid::Mask y = x; y && !decided; y &= y - 1) {
      const matroid::Mask sub = x & ~(y & (~y + 1));
      auto it = known.find(sub);
      if (it != known.end() && !it->second) decided = true;
    }
    if (!decided && d >= 1 && x) {
      // Extend a certificate of x minus its top edge.
      const int top = 63 - std::countl_zero(x);
      const matroid::Mask sub = x & ~(matroid::Mask{1} << top);
      auto it = known.find(sub);
      if (it != known.end() && it->second) {
        for (int c = 0; c < d && !cert; ++c) {
          auto colors = it->second->colors;
          colors.push_back(c);
          DColoring col(g, d, std::move(colors));
          if (verify_d_bernstein(col)) cert = std::move(col);
        }
      }
    }
    if (!decided && !cert) {
      if (d == 0) {
        auto r = search_bernstein(g, node_budget);
        rec.status = r.status;
        if (r.found()) cert = DColoring::from_orientation(*r.value);
      } else {
        auto r = search_d_bernstein(g, d, node_budget);
        rec.status = r.status;
        if (r.found()) cert = r.value->coloring;
      }
    }
    if (cert) rec.status = SearchStatus::Found;
    if (rec.status != SearchStatus::BudgetExceeded) known.emplace(x, cert);

    ++sum.instances;
    sum.independent += rec.independent;
    switch (rec.status) {
      case SearchStatus::Found:
        ++sum.found;
        if (!rec.independent) ++sum.soundness_failures;
        break;
      case SearchStatus::CertifiedNone:
        ++sum.certified_none;
        if (rec.independent) ++sum.completeness_gaps;
        break;
      case SearchStatus::BudgetExceeded:
        ++sum.budget;
        break;
    }
    sum.records.push_back(rec);
  }
  return sum;
}

}  // namespace rigidmat::certs

#endif  // RIGIDMAT_CERTS_SCAN_HPP
