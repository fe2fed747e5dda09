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

#ifndef RIGIDMAT_EXACTALG_POLY_GFP_HPP
#define RIGIDMAT_EXACTALG_POLY_GFP_HPP

// Dense univariate polynomials over a small prime field GF(p), coefficients
// stored lowest degree first. Only what the extension-field code needs.

#include <cstdint>
#include <utility>
#include <vector>

#include "rigidmat/errors.hpp"
#include "rigidmat/exactalg/prime_field.hpp"
#include "rigidmat/rng.hpp"

namespace rigidmat::exactalg::gfp {

using Poly = std::vector<std::uint32_t>;

inline void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw DivisionByZero();
  return static_cast<std::uint32_t>(powmod(a, p - 2, p));
}

inline Poly sub(Poly a, const Poly& b, std::uint32_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  trim(a);
  return a;
}

inline Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<std::uint64_t> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += std::uint64_t{a[i]} * b[j];
  }
  Poly out(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<std::uint32_t>(acc[i] % p);
  trim(out);
  return out;
}

/// Remainder of a modulo f (f nonzero).
inline Poly mod(Poly a, const Poly& f, std::uint32_t p) {
  Poly g = f;
  trim(g);
  if (g.empty()) throw DivisionByZero();
  trim(a);
  const int dg = degree(g);
  const std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (degree(a) >= dg) {
    const int shift = degree(a) - dg;
    const std::uint32_t factor = static_cast<std::uint32_t>(std::uint64_t{a.back()} * lead_inv % p);
    for (int i = 0; i <= dg; ++i) {
      auto& coef = a[static_cast<std::size_t>(i + shift)];
      coef = static_cast<std::uint32_t>((coef + p - std::uint64_t{factor} * g[static_cast<std::size_t>(i)] % p) % p);
    }
    trim(a);
  }
  return a;
}

inline Poly mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) { return mod(mul(a, b, p), f, p); }

inline Poly powmod(Poly base, std::uint64_t exp, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = mod(std::move(base), f, p);
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, base, f, p);
    base = mulmod(base, base, f, p);
    exp >>= 1;
  }
  return mod(result, f, p);
}

/// Monic gcd.
inline Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint32_t li = inv_mod(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(std::uint64_t{c} * li % p);
  }
  return a;
}

/// Ben-Or test: a monic f of degree k is irreducible iff
/// gcd(x^(p^i) - x mod f, f) = 1 for every 1 <= i <= k/2.
inline bool is_irreducible(const Poly& f_in, std::uint32_t p) {
  Poly f = f_in;
  trim(f);
  const int k = degree(f);
  if (k < 1) return false;
  if (k == 1) return true;
  const Poly x{0, 1};
  Poly h = x;
  for (int i = 1; i <= k / 2; ++i) {
    h = powmod(h, p, f, p);
    const Poly g = gcd(f, sub(h, x, p), p);
    if (g.size() != 1) return false;
  }
  return true;
}

/// Random monic irreducible polynomial of degree k (expected ~k draws).
inline Poly find_irreducible(std::uint32_t p, int k, Rng& rng) {
  require(k >= 1, "find_irreducible: degree must be positive");
  for (;;) {
    Poly f(static_cast<std::size_t>(k) + 1);
    for (int i = 0; i < k; ++i) f[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(rng.uniform_below(p));
    f[static_cast<std::size_t>(k)] = 1;
    if (is_irreducible(f, p)) return f;
  }
}

}  // namespace rigidmat::exactalg::gfp

#endif  // RIGIDMAT_EXACTALG_POLY_GFP_HPP
