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

#ifndef RIGIDMAT_MATROID_ORACLE_HPP
#define RIGIDMAT_MATROID_ORACLE_HPP

#include <gmpxx.h>

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rigidmat/errors.hpp"
#include "rigidmat/matroid/ground_set.hpp"

namespace rigidmat::matroid {

/// How far a rank value can be trusted. A MonteCarlo bound is an upper
/// bound on the probability that one rank query under-reports.
struct Certainty {
  enum class Kind { Deterministic, MonteCarlo };
  Kind kind = Kind::Deterministic;
  mpq_class error_bound = 0;

  static Certainty deterministic() { return {}; }
  static Certainty monte_carlo(mpq_class bound) { return {Kind::MonteCarlo, std::move(bound)}; }

  bool is_deterministic() const { return kind == Kind::Deterministic; }

  /// Bound after composing `queries` rank queries of this oracle.
  Certainty scaled(int queries) const {
    if (is_deterministic()) return *this;
    return monte_carlo(error_bound * queries);
  }

  /// Union bound over two sources.
  friend Certainty combine(const Certainty& a, const Certainty& b) {
    if (a.is_deterministic()) return b;
    if (b.is_deterministic()) return a;
    return monte_carlo(a.error_bound + b.error_bound);
  }

  double bound_as_double() const { return error_bound.get_d(); }

  std::string describe() const {
    if (is_deterministic()) return "Deterministic";
    char buf[64];
    std::snprintf(buf, sizeof buf, "MonteCarlo(error <= %.3e)", error_bound.get_d());
    return buf;
  }
};

/// Rank function on a finite ground set.
///
/// rank_fn answers single queries. table_fn, when present, answers a whole
/// family at once: table_fn(base, support)[x] is the rank of base plus the
/// support elements selected by the bits of x (bit j = j-th lowest element
/// of support). Single queries are memoized; copies share the memo.
class MatroidOracle {
 public:
  using RankFn = std::function<int(Mask)>;
  using TableFn = std::function<std::vector<std::uint8_t>(Mask base, Mask support)>;

  MatroidOracle(GroundPtr ground, RankFn rank_fn, TableFn table_fn, Certainty certainty, std::string name)
      : ground_(std::move(ground)),
        rank_fn_(std::move(rank_fn)),
        table_fn_(std::move(table_fn)),
        certainty_(std::move(certainty)),
        name_(std::move(name)),
        memo_(std::make_shared<Memo>()) {
    require(ground_ != nullptr, "MatroidOracle: null ground set");
    require(static_cast<bool>(rank_fn_), "MatroidOracle: missing rank function");
  }

  const GroundPtr& ground() const { return ground_; }
  std::size_t size() const { return ground_->size(); }
  Mask full() const { return ground_->full(); }
  const Certainty& certainty() const { return certainty_; }
  const std::string& name() const { return name_; }

  int rank(Mask x) const {
    require((x & ~full()) == 0, "MatroidOracle::rank: subset outside the ground set");
    {
      std::shared_lock lock(memo_->mutex);
      auto it = memo_->ranks.find(x);
      if (it != memo_->ranks.end()) return it->second;
    }
    const int r = rank_fn_(x);
    std::unique_lock lock(memo_->mutex);
    memo_->ranks.emplace(x, r);
    return r;
  }

  int rank(const EdgeSet& s) const {
    require(same_ground(s.ground(), ground_), "MatroidOracle::rank: edge set is over a different ground set");
    return rank(s.mask());
  }

  int total_rank() const { return rank(full()); }

  std::vector<std::uint8_t> table(Mask base, Mask support) const {
    require((base & support) == 0, "MatroidOracle::table: base and support overlap");
    require(((base | support) & ~full()) == 0, "MatroidOracle::table: subset outside the ground set");
    const auto key = std::make_pair(base, support);
    {
      std::shared_lock lock(memo_->mutex);
      auto it = memo_->tables.find(key);
      if (it != memo_->tables.end()) return *it->second;
    }
    std::vector<std::uint8_t> t;
    if (table_fn_) {
      t = table_fn_(base, support);
    } else {
      const auto bits = bit_list(support);
      t.resize(std::size_t{1} << bits.size());
      for (std::uint64_t x = 0; x < t.size(); ++x) t[x] = static_cast<std::uint8_t>(rank(base | expand(x, bits)));
    }
    std::unique_lock lock(memo_->mutex);
    // Large tables are not retained.
    if (t.size() <= (std::size_t{1} << 22) && memo_->tables.size() < 8)
      memo_->tables.emplace(key, std::make_shared<const std::vector<std::uint8_t>>(t));
    return t;
  }

  bool has_table() const { return static_cast<bool>(table_fn_); }

  static std::vector<std::size_t> bit_list(Mask m) {
    std::vector<std::size_t> out;
    for (; m; m &= m - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    return out;
  }

  /// Maps bit j of a compressed index to element bits[j].
  static Mask expand(std::uint64_t x, const std::vector<std::size_t>& bits) {
    Mask out = 0;
    for (std::size_t j = 0; x; ++j, x >>= 1)
      if (x & 1) out |= Mask{1} << bits[j];
    return out;
  }

 private:
  struct Memo {
    std::shared_mutex mutex;
    std::unordered_map<Mask, int> ranks;
    std::map<std::pair<Mask, Mask>, std::shared_ptr<const std::vector<std::uint8_t>>> tables;
  };

  GroundPtr ground_;
  RankFn rank_fn_;
  TableFn table_fn_;
  Certainty certainty_;
  std::string name_;
  std::shared_ptr<Memo> memo_;
};

}  // namespace rigidmat::matroid

#endif  // RIGIDMAT_MATROID_ORACLE_HPP
