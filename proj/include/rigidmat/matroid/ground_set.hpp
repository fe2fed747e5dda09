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

#ifndef RIGIDMAT_MATROID_GROUND_SET_HPP
#define RIGIDMAT_MATROID_GROUND_SET_HPP

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigidmat/errors.hpp"

namespace rigidmat::matroid {

/// Subsets of a ground set are bitmasks over element ids, so ground sets
/// hold at most 64 elements.
using Mask = std::uint64_t;
inline constexpr std::size_t kMaxGround = 64;

inline int popcount(Mask x) { return std::popcount(x); }
inline Mask low_bits(std::size_t n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// Element label. Pair is an ordered cell (row i, column j) of a grid;
/// UnorderedPair is {i, j} with i < j; Singleton is i. Indices are 0-based.
struct Label {
  enum class Kind { Pair, UnorderedPair, Singleton };
  Kind kind = Kind::Pair;
  int i = 0;
  int j = 0;

  friend bool operator==(const Label&, const Label&) = default;

  std::string to_string() const {
    switch (kind) {
      case Kind::Pair:
        return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
      case Kind::UnorderedPair:
        return "{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}";
      case Kind::Singleton:
        return std::to_string(i + 1);
    }
    return {};
  }
};

class GroundSet {
 public:
  explicit GroundSet(std::vector<Label> labels) : labels_(std::move(labels)) {
    require(labels_.size() <= kMaxGround, "GroundSet: at most 64 elements are supported");
    for (std::size_t a = 0; a < labels_.size(); ++a)
      for (std::size_t b = a + 1; b < labels_.size(); ++b)
        require(!(labels_[a] == labels_[b]), "GroundSet: duplicate label " + labels_[a].to_string());
  }

  /// [m] x [n] in row-major order: id(i, j) = i * n + j.
  static std::shared_ptr<const GroundSet> grid(int m, int n) {
    require(m >= 0 && n >= 0, "GroundSet::grid: negative dimension");
    std::vector<Label> labels;
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < n; ++j) labels.push_back({Label::Kind::Pair, i, j});
    return std::make_shared<const GroundSet>(std::move(labels));
  }

  /// binom([n], 2) in lexicographic order.
  static std::shared_ptr<const GroundSet> pairs(int n) {
    require(n >= 0, "GroundSet::pairs: negative size");
    std::vector<Label> labels;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) labels.push_back({Label::Kind::UnorderedPair, i, j});
    return std::make_shared<const GroundSet>(std::move(labels));
  }

  /// binom([n], 2) followed by the singletons 0..n-1.
  static std::shared_ptr<const GroundSet> pairs_and_singletons(int n) {
    require(n >= 0, "GroundSet::pairs_and_singletons: negative size");
    std::vector<Label> labels;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) labels.push_back({Label::Kind::UnorderedPair, i, j});
    for (int i = 0; i < n; ++i) labels.push_back({Label::Kind::Singleton, i, i});
    return std::make_shared<const GroundSet>(std::move(labels));
  }

  std::size_t size() const { return labels_.size(); }
  Mask full() const { return low_bits(labels_.size()); }
  const Label& label(std::size_t id) const { return labels_.at(id); }
  const std::vector<Label>& labels() const { return labels_; }

  std::optional<std::size_t> find(const Label& l) const {
    for (std::size_t id = 0; id < labels_.size(); ++id)
      if (labels_[id] == l) return id;
    return std::nullopt;
  }

  std::string format(Mask x) const {
    std::string out = "{";
    bool first = true;
    for (std::size_t id = 0; id < labels_.size(); ++id) {
      if (!(x >> id & 1)) continue;
      if (!first) out += " ";
      out += labels_[id].to_string();
      first = false;
    }
    return out + "}";
  }

  friend bool operator==(const GroundSet& a, const GroundSet& b) { return a.labels_ == b.labels_; }

 private:
  std::vector<Label> labels_;
};

using GroundPtr = std::shared_ptr<const GroundSet>;

/// A subset of a ground set.
class EdgeSet {
 public:
  explicit EdgeSet(GroundPtr ground, Mask members = 0) : ground_(std::move(ground)), members_(members) {
    require(ground_ != nullptr, "EdgeSet: null ground set");
    require((members_ & ~ground_->full()) == 0, "EdgeSet: members outside the ground set");
  }

  /// Cells of a grid ground set, 0-based.
  static EdgeSet from_cells(GroundPtr ground, const std::vector<std::pair<int, int>>& cells) {
    EdgeSet e(std::move(ground));
    for (auto [i, j] : cells) {
      auto id = e.ground_->find({Label::Kind::Pair, i, j});
      require(id.has_value(), "EdgeSet::from_cells: cell (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                  ") is not in the ground set");
      e.members_ |= Mask{1} << *id;
    }
    return e;
  }

  const GroundPtr& ground() const { return ground_; }
  Mask mask() const { return members_; }
  int size() const { return popcount(members_); }
  bool empty() const { return members_ == 0; }
  bool contains(std::size_t id) const { return id < 64 && (members_ >> id & 1); }

  EdgeSet with(std::size_t id) const { return EdgeSet(ground_, members_ | (Mask{1} << id)); }
  EdgeSet without(std::size_t id) const { return EdgeSet(ground_, members_ & ~(Mask{1} << id)); }
  EdgeSet complement() const { return EdgeSet(ground_, ground_->full() & ~members_); }

  std::vector<std::size_t> ids() const {
    std::vector<std::size_t> out;
    for (Mask x = members_; x; x &= x - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(x)));
    return out;
  }

  std::string to_string() const { return ground_->format(members_); }

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
    return a.members_ == b.members_ && (a.ground_ == b.ground_ || *a.ground_ == *b.ground_);
  }

 private:
  GroundPtr ground_;
  Mask members_;
};

inline bool same_ground(const GroundPtr& a, const GroundPtr& b) { return a == b || (a && b && *a == *b); }

}  // namespace rigidmat::matroid

#endif  // RIGIDMAT_MATROID_GROUND_SET_HPP
