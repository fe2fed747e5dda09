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

#ifndef RIGIDMAT_EXACTALG_PRIME_FIELD_HPP
#define RIGIDMAT_EXACTALG_PRIME_FIELD_HPP

#include <cstdint>
#include <string>

#include "rigidmat/errors.hpp"
#include "rigidmat/rng.hpp"

namespace rigidmat::exactalg {

using u128 = unsigned __int128;

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

/// Deterministic Miller-Rabin for all 64-bit inputs (first twelve prime bases).
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::uint64_t kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kBases) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// 2^61 - 1. Reduction modulo this prime avoids a 128-bit division.
inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

/// GF(q) for a prime q < 2^63.
class PrimeField {
 public:
  using Element = std::uint64_t;

  explicit PrimeField(std::uint64_t modulus) : q_(modulus), mersenne_(modulus == kMersenne61) {
    require(modulus < (std::uint64_t{1} << 63), "PrimeField: modulus must be below 2^63");
    require(is_prime(modulus), "PrimeField: modulus " + std::to_string(modulus) + " is not prime");
  }

  std::uint64_t modulus() const { return q_; }
  std::uint64_t characteristic() const { return q_; }
  /// log2 of the field size, rounded down.
  int size_log2() const { return 63 - __builtin_clzll(q_); }
  std::string describe() const { return "GF(" + std::to_string(q_) + ")"; }

  Element zero() const { return 0; }
  Element one() const { return 1 % q_; }
  bool is_zero(Element a) const { return a == 0; }
  bool equal(Element a, Element b) const { return a == b; }

  Element from_int(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(q_);
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return static_cast<Element>(r);
  }

  Element add(Element a, Element b) const {
    Element s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + (q_ - b); }
  Element neg(Element a) const { return a == 0 ? 0 : q_ - a; }

  Element mul(Element a, Element b) const {
    if (mersenne_) {
      const u128 p = static_cast<u128>(a) * b;
      std::uint64_t lo = static_cast<std::uint64_t>(p & kMersenne61);
      std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
      std::uint64_t s = lo + hi;
      if (s >= kMersenne61) s -= kMersenne61;
      return s;
    }
    return mulmod(a, b, q_);
  }

  Element inv(Element a) const {
    if (a == 0) throw DivisionByZero();
    // Extended Euclid on signed 128-bit values.
    __int128 t = 0, new_t = 1;
    __int128 r = q_, new_r = a;
    while (new_r != 0) {
      const __int128 quotient = r / new_r;
      const __int128 tmp_t = t - quotient * new_t;
      t = new_t;
      new_t = tmp_t;
      const __int128 tmp_r = r - quotient * new_r;
      r = new_r;
      new_r = tmp_r;
    }
    if (t < 0) t += q_;
    return static_cast<Element>(t);
  }

  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  Element sample(Rng& rng) const { return rng.uniform_below(q_); }

  std::string to_string(Element a) const { return std::to_string(a); }

 private:
  std::uint64_t q_;
  bool mersenne_;
};

}  // namespace rigidmat::exactalg

#endif  // RIGIDMAT_EXACTALG_PRIME_FIELD_HPP
