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

#ifndef RIGIDMAT_EXACTALG_EXTENSION_FIELD_HPP
#define RIGIDMAT_EXACTALG_EXTENSION_FIELD_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "rigidmat/errors.hpp"
#include "rigidmat/exactalg/irreducible_table.hpp"
#include "rigidmat/exactalg/poly_gfp.hpp"
#include "rigidmat/exactalg/prime_field.hpp"
#include "rigidmat/rng.hpp"

namespace rigidmat::exactalg {

/// Built-in modulus for GF(p^k), if the table has one.
inline const IrreducibleEntry* find_table_modulus(std::uint32_t p, int k) {
  for (const auto& e : kIrreducibleTable) {
    if (e.p == p && e.k == k) return &e;
  }
  return nullptr;
}

/// GF(p^k) = GF(p)[x] / (f) for a monic irreducible f of degree k.
///
/// Elements are coefficient vectors of polynomials of degree < k. The
/// representation caps k at 32 and p below 256, which covers every field of
/// size >= 2^30 over the small primes this library targets.
class ExtensionField {
 public:
  static constexpr int kMaxDegree = 32;

  struct Element {
    std::array<std::uint8_t, kMaxDegree> c{};
    friend bool operator==(const Element&, const Element&) = default;
  };

  ExtensionField(std::uint32_t p, int k, std::vector<std::uint32_t> modulus_poly)
      : p_(p), k_(k), modulus_(std::move(modulus_poly)) {
    require(p < 256 && is_prime(p), "ExtensionField: p must be a prime below 256");
    require(k >= 1 && k <= kMaxDegree, "ExtensionField: k must be in [1, 32]");
    gfp::trim(modulus_);
    require(gfp::degree(modulus_) == k, "ExtensionField: modulus polynomial must have degree k");
    for (auto c : modulus_) require(c < p, "ExtensionField: modulus coefficients must be reduced mod p");
    require(modulus_.back() == 1, "ExtensionField: modulus polynomial must be monic");
    require(gfp::is_irreducible(modulus_, p), "ExtensionField: modulus polynomial is reducible over GF(p)");
    for (int j = 0; j < k_; ++j) neg_tail_[static_cast<std::size_t>(j)] = (p_ - modulus_[static_cast<std::size_t>(j)]) % p_;
  }

  /// GF(p^k) with the built-in modulus, or one found by seeded search when
  /// (p, k) is outside the table.
  static ExtensionField standard(std::uint32_t p, int k) {
    if (const auto* e = find_table_modulus(p, k)) {
      std::vector<std::uint32_t> f(e->coeffs.begin(), e->coeffs.begin() + k + 1);
      return ExtensionField(p, k, std::move(f));
    }
    Rng rng(Rng::mix(p * 1000003ULL + static_cast<std::uint64_t>(k)));
    return ExtensionField(p, k, gfp::find_irreducible(p, k, rng));
  }

  /// Smallest k with p^k >= 2^min_log2.
  static int degree_for_size(std::uint32_t p, int min_log2) {
    int k = 1;
    long double size = p;
    while (size < std::ldexp(1.0L, min_log2)) {
      size *= p;
      ++k;
    }
    return k;
  }

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t p() const { return p_; }
  int degree() const { return k_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  int size_log2() const { return static_cast<int>(std::floor(k_ * std::log2(static_cast<double>(p_)))); }
  std::string describe() const { return "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ")"; }

  Element zero() const { return {}; }
  Element one() const {
    Element e;
    e.c[0] = 1;
    return e;
  }
  bool is_zero(const Element& a) const { return a == Element{}; }
  bool equal(const Element& a, const Element& b) const { return a == b; }

  Element from_int(std::int64_t v) const {
    Element e;
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    e.c[0] = static_cast<std::uint8_t>(r);
    return e;
  }

  /// The class of x (the generator of the polynomial basis).
  Element generator() const {
    if (k_ == 1) return from_int(-static_cast<std::int64_t>(modulus_[0]));
    Element e;
    e.c[1] = 1;
    return e;
  }

  Element add(const Element& a, const Element& b) const {
    Element r;
    for (int i = 0; i < k_; ++i) {
      const unsigned s = a.c[i] + b.c[i];
      r.c[i] = static_cast<std::uint8_t>(s >= p_ ? s - p_ : s);
    }
    return r;
  }
  Element sub(const Element& a, const Element& b) const {
    Element r;
    for (int i = 0; i < k_; ++i) {
      const unsigned s = a.c[i] + p_ - b.c[i];
      r.c[i] = static_cast<std::uint8_t>(s >= p_ ? s - p_ : s);
    }
    return r;
  }
  Element neg(const Element& a) const { return sub(Element{}, a); }

  Element mul(const Element& a, const Element& b) const {
    std::array<std::uint32_t, 2 * kMaxDegree> acc{};
    for (int i = 0; i < k_; ++i) {
      const std::uint32_t ai = a.c[i];
      if (ai == 0) continue;
      for (int j = 0; j < k_; ++j) acc[i + j] += ai * b.c[j];
    }
    // x^k = -(f_0 + ... + f_{k-1} x^{k-1}), applied from the top down.
    for (int i = 2 * k_ - 2; i >= k_; --i) {
      const std::uint32_t top = acc[i] % p_;
      if (top == 0) continue;
      for (int j = 0; j < k_; ++j) acc[i - k_ + j] += top * neg_tail_[j];
    }
    Element r;
    for (int i = 0; i < k_; ++i) r.c[i] = static_cast<std::uint8_t>(acc[i] % p_);
    return r;
  }

  Element inv(const Element& a) const {
    if (is_zero(a)) throw DivisionByZero();
    // Extended Euclid: track s with s * a = r (mod f).
    gfp::Poly r0 = modulus_, r1 = to_poly(a);
    gfp::Poly s0{}, s1{1};
    while (gfp::degree(r1) > 0) {
      // q, rem = divmod(r0, r1)
      gfp::Poly q;
      gfp::Poly rem = r0;
      const std::uint32_t lead_inv = gfp::inv_mod(r1.back(), p_);
      q.assign(static_cast<std::size_t>(gfp::degree(rem) - gfp::degree(r1) + 1), 0);
      while (gfp::degree(rem) >= gfp::degree(r1)) {
        const int shift = gfp::degree(rem) - gfp::degree(r1);
        const std::uint32_t factor = static_cast<std::uint32_t>(std::uint64_t{rem.back()} * lead_inv % p_);
        q[static_cast<std::size_t>(shift)] = factor;
        for (std::size_t i = 0; i < r1.size(); ++i) {
          auto& c = rem[i + static_cast<std::size_t>(shift)];
          c = static_cast<std::uint32_t>((c + p_ - std::uint64_t{factor} * r1[i] % p_) % p_);
        }
        gfp::trim(rem);
      }
      gfp::trim(q);
      gfp::Poly s2 = gfp::sub(s0, gfp::mul(q, s1, p_), p_);
      r0 = std::move(r1);
      r1 = std::move(rem);
      s0 = std::move(s1);
      s1 = std::move(s2);
    }
    // r1 is a nonzero constant since f is irreducible.
    const std::uint32_t c = gfp::inv_mod(r1[0], p_);
    for (auto& x : s1) x = static_cast<std::uint32_t>(std::uint64_t{x} * c % p_);
    return from_poly(gfp::mod(s1, modulus_, p_));
  }

  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  Element sample(Rng& rng) const {
    Element e;
    for (int i = 0; i < k_; ++i) e.c[i] = static_cast<std::uint8_t>(rng.uniform_below(p_));
    return e;
  }

  gfp::Poly to_poly(const Element& a) const {
    gfp::Poly out(a.c.begin(), a.c.begin() + k_);
    gfp::trim(out);
    return out;
  }

  Element from_poly(const gfp::Poly& poly) const {
    const gfp::Poly reduced = gfp::mod(poly, modulus_, p_);
    Element e;
    for (std::size_t i = 0; i < reduced.size(); ++i) e.c[i] = static_cast<std::uint8_t>(reduced[i]);
    return e;
  }

  std::string to_string(const Element& a) const {
    std::string out;
    for (int i = k_ - 1; i >= 0; --i) {
      if (a.c[i] == 0) continue;
      if (!out.empty()) out += " + ";
      if (i == 0 || a.c[i] != 1) out += std::to_string(a.c[i]);
      if (i >= 1) out += "x";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
  }

 private:
  std::uint32_t p_;
  int k_;
  std::vector<std::uint32_t> modulus_;
  std::array<std::uint32_t, kMaxDegree> neg_tail_{};
};

}  // namespace rigidmat::exactalg

#endif  // RIGIDMAT_EXACTALG_EXTENSION_FIELD_HPP
