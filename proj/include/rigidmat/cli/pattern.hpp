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

// Erasure pattern files.
//
//   m n [a b] [base=0|base=1]
//   <cells>
//
// Cells are either one "i j" pair per line (1-based unless base=0), with an
// optional third token L (row to column) or R (column to row), or m lines
// of n characters: '.' for an absent cell, '#' for a present one, and '>'
// or '<' for a present cell oriented row to column or column to row.
// Lines starting with '%' are comments.

#ifndef RIGIDMAT_CLI_PATTERN_HPP
#define RIGIDMAT_CLI_PATTERN_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "rigidmat/certs/orientation.hpp"
#include "rigidmat/errors.hpp"
#include "rigidmat/matroid/ground_set.hpp"

namespace rigidmat::cli {

struct PatternFile {
  int m = 0;
  int n = 0;
  std::optional<int> a;
  std::optional<int> b;
  matroid::Mask cells = 0;
  /// One entry per cell when the file orients every cell.
  std::vector<certs::Orientation::Arc> arcs;

  bool oriented() const { return !arcs.empty(); }
  matroid::EdgeSet edge_set() const { return matroid::EdgeSet(matroid::GroundSet::grid(m, n), cells); }
  certs::BipartiteGraph graph() const { return certs::BipartiteGraph(m, n, cells); }
  std::optional<certs::Orientation> orientation() const {
    if (!oriented()) return std::nullopt;
    return certs::Orientation::from_arcs(m, n, arcs);
  }
};

namespace detail {

inline std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

inline int parse_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  require(used == s.size() && !s.empty(), "pattern: expected an integer for " + what + ", got '" + s + "'");
  return v;
}

inline bool is_grid_line(const std::string& s) {
  return !s.empty() && s.find_first_not_of(".#<>") == std::string::npos;
}

}  // namespace detail

inline PatternFile parse_pattern(std::string_view text) {
  std::vector<std::pair<int, std::string>> lines;  // (line number, trimmed content)
  {
    std::istringstream in{std::string(text)};
    int no = 0;
    for (std::string line; std::getline(in, line);) {
      ++no;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '%') continue;
      const auto last = line.find_last_not_of(" \t\r");
      lines.emplace_back(no, line.substr(first, last - first + 1));
    }
  }
  require(!lines.empty(), "pattern: missing header line 'm n [a b]'");

  PatternFile p;
  int base = 1;
  {
    std::vector<int> nums;
    for (const auto& t : detail::split_ws(lines[0].second)) {
      if (t.rfind("base=", 0) == 0) {
        base = detail::parse_int(t.substr(5), "base");
        require(base == 0 || base == 1, "pattern: base must be 0 or 1");
      } else {
        nums.push_back(detail::parse_int(t, "header"));
      }
    }
    require(nums.size() == 2 || nums.size() == 4, "pattern: header must be 'm n' or 'm n a b'");
    p.m = nums[0];
    p.n = nums[1];
    require(p.m >= 1 && p.n >= 1 && p.m * p.n <= 64, "pattern: need m, n >= 1 and m * n <= 64");
    if (nums.size() == 4) {
      p.a = nums[2];
      p.b = nums[3];
      require(*p.a >= 0 && *p.a <= p.m && *p.b >= 0 && *p.b <= p.n, "pattern: need 0 <= a <= m and 0 <= b <= n");
    }
  }

  std::size_t directed = 0, cells = 0;
  auto add = [&](int i, int j, std::optional<certs::Dir> dir, int line) {
    const std::string where = " (line " + std::to_string(line) + ")";
    require(i >= 0 && i < p.m && j >= 0 && j < p.n, "pattern: cell out of range" + where);
    const matroid::Mask bit = matroid::Mask{1} << (i * p.n + j);
    require(!(p.cells & bit), "pattern: duplicate cell" + where);
    p.cells |= bit;
    ++cells;
    if (dir) {
      ++directed;
      p.arcs.push_back({i, j, *dir});
    }
  };

  const bool grid = lines.size() > 1 && detail::is_grid_line(lines[1].second);
  if (grid) {
    require(lines.size() == static_cast<std::size_t>(p.m) + 1, "pattern: a grid needs exactly m rows");
    for (int i = 0; i < p.m; ++i) {
      const auto& [no, row] = lines[static_cast<std::size_t>(i) + 1];
      require(detail::is_grid_line(row) && row.size() == static_cast<std::size_t>(p.n),
              "pattern: grid row " + std::to_string(i + 1) + " must have n characters from '.#<>'");
      for (int j = 0; j < p.n; ++j) {
        const char c = row[static_cast<std::size_t>(j)];
        if (c == '#') add(i, j, std::nullopt, no);
        if (c == '>') add(i, j, certs::Dir::LeftToRight, no);
        if (c == '<') add(i, j, certs::Dir::RightToLeft, no);
      }
    }
  } else {
    for (std::size_t k = 1; k < lines.size(); ++k) {
      const auto& [no, line] = lines[k];
      const auto t = detail::split_ws(line);
      require(t.size() == 2 || t.size() == 3, "pattern: expected 'i j' or 'i j L|R' on line " + std::to_string(no));
      std::optional<certs::Dir> dir;
      if (t.size() == 3) {
        require(t[2] == "L" || t[2] == "R", "pattern: direction must be L or R on line " + std::to_string(no));
        dir = t[2] == "L" ? certs::Dir::LeftToRight : certs::Dir::RightToLeft;
      }
      add(detail::parse_int(t[0], "row") - base, detail::parse_int(t[1], "column") - base, dir, no);
    }
  }
  require(directed == 0 || directed == cells, "pattern: either every cell or no cell carries a direction");
  return p;
}

inline PatternFile load_pattern(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "pattern: cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_pattern(buf.str());
}

/// Grid rendering, one line per row.
inline std::vector<std::string> pattern_rows(int m, int n, matroid::Mask cells) {
  std::vector<std::string> out;
  for (int i = 0; i < m; ++i) {
    std::string row;
    for (int j = 0; j < n; ++j) row += (cells >> (i * n + j) & 1) ? '#' : '.';
    out.push_back(row);
  }
  return out;
}

}  // namespace rigidmat::cli

#endif  // RIGIDMAT_CLI_PATTERN_HPP
