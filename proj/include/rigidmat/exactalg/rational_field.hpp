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

#ifndef RIGIDMAT_EXACTALG_RATIONAL_FIELD_HPP
#define RIGIDMAT_EXACTALG_RATIONAL_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "rigidmat/errors.hpp"
#include "rigidmat/rng.hpp"

namespace rigidmat::exactalg {

/// Default half-width H of the integer sampling window [-H, H].
inline constexpr std::int64_t kDefaultSampleWindow = std::int64_t{1} << 20;

/// Q with arbitrary-precision arithmetic (GMP).
class RationalField {
 public:
  using Element = mpq_class;

  explicit RationalField(std::int64_t sample_window = kDefaultSampleWindow) : window_(sample_window) {
    require(sample_window >= 1, "RationalField: sample window must be positive");
  }

  std::int64_t sample_window() const { return window_; }
  std::uint64_t characteristic() const { return 0; }
  /// Size of the sampling set, used for Schwartz-Zippel bounds.
  std::uint64_t sample_set_size() const { return 2 * static_cast<std::uint64_t>(window_) + 1; }
  std::string describe() const { return "Q"; }

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element from_int(std::int64_t v) const {
    mpz_class z;
    mpz_set_si(z.get_mpz_t(), static_cast<long>(v));
    return Element(z);
  }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (is_zero(a)) throw DivisionByZero();
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  Element sample(Rng& rng) const { return from_int(rng.uniform_int(-window_, window_)); }

  std::string to_string(const Element& a) const { return a.get_str(); }

 private:
  std::int64_t window_;
};

}  // namespace rigidmat::exactalg

#endif  // RIGIDMAT_EXACTALG_RATIONAL_FIELD_HPP
