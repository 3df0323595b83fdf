// Copyright 2026 The ffl Authors.
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "ffl/prime_field.hpp"
#include "ffl/rational.hpp"

// Modular gcd of univariate polynomials over Q: monic gcds modulo word-size
// primes, combined by CRT and lifted back by rational reconstruction. The
// caller verifies the candidate by exact division, so a wrong lift can only
// cost time, never correctness.
namespace ffl::detail {

using ModPoly = std::vector<std::uint64_t>;  // low degree first, no trailing zeros

inline void mod_trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

// Monic gcd in F_p[t].
inline ModPoly mod_gcd(ModPoly a, ModPoly b, std::uint64_t p) {
  mod_trim(a);
  mod_trim(b);
  while (!b.empty()) {
    const std::uint64_t inv = mod_inv(b.back(), p);
    while (a.size() >= b.size()) {
      const std::uint64_t f = mulmod(a.back(), inv, p);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        const std::uint64_t s = mulmod(f, b[i], p);
        std::uint64_t& x = a[i + shift];
        x = x >= s ? x - s : x + p - s;
      }
      mod_trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const std::uint64_t inv = mod_inv(a.back(), p);
    for (auto& x : a) x = mulmod(x, inv, p);
  }
  return a;
}

// Primes just below 2^61, generated once.
inline const std::vector<std::uint64_t>& gcd_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> v;
    for (std::uint64_t n = kMersenne61; v.size() < 256; n -= 2)
      if (is_prime_u64(n)) v.push_back(n);
    return v;
  }();
  return primes;
}

// Primitive integer polynomial proportional to the rational one.
inline std::vector<mpz_class> integer_primitive(const std::vector<Rational>& c) {
  mpz_class l = 1;
  for (const auto& x : c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.denominator().get_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(c.size());
  mpz_class g = 0;
  for (const auto& x : c) {
    out.push_back(x.numerator() * (l / x.denominator()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

inline ModPoly reduce_mod(const std::vector<mpz_class>& a, std::uint64_t p) {
  ModPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mpz_fdiv_ui(a[i].get_mpz_t(), p);
  mod_trim(r);
  return r;
}

// n/d with n = u*d mod m and |n|, d <= sqrt(m/2), if one exists.
inline std::optional<Rational> rational_reconstruct(const mpz_class& u, const mpz_class& m) {
  mpz_class bound;
  mpz_class half = m / 2;
  mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  mpz_class r0 = m, r1 = u, t0 = 0, t1 = 1, q, tmp;
  while (r1 > bound) {
    mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
    tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
  if (g != 1) return std::nullopt;
  if (t1 < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  return Rational(r1, t1);
}

// Candidate monic gcd coefficients (low degree first). An empty result
// means the gcd is 1; nullopt means the primes ran out.
template <class Verify>
std::optional<std::vector<Rational>> modular_gcd(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                                 Verify&& verify) {
  const auto ia = integer_primitive(a);
  const auto ib = integer_primitive(b);
  long best = -1;
  mpz_class modulus = 1;
  std::vector<mpz_class> residues;
  std::vector<Rational> previous;
  for (std::uint64_t p : gcd_primes()) {
    if (mpz_divisible_ui_p(ia.back().get_mpz_t(), p) || mpz_divisible_ui_p(ib.back().get_mpz_t(), p)) continue;
    const ModPoly g = mod_gcd(reduce_mod(ia, p), reduce_mod(ib, p), p);
    const long d = static_cast<long>(g.size()) - 1;
    if (d == 0) return std::vector<Rational>{};
    if (best >= 0 && d > best) continue;  // unlucky prime
    if (best < 0 || d < best) {
      best = d;
      modulus = p;
      residues.assign(g.size(), 0);
      for (std::size_t i = 0; i < g.size(); ++i) residues[i] = static_cast<unsigned long>(g[i]);
      previous.clear();
    } else {
      // x = r + M * ((c - r) * M^-1 mod p)
      const std::uint64_t minv = mod_inv(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
      for (std::size_t i = 0; i < g.size(); ++i) {
        const std::uint64_t r = mpz_fdiv_ui(residues[i].get_mpz_t(), p);
        const std::uint64_t diff = g[i] >= r ? g[i] - r : g[i] + p - r;
        const std::uint64_t k = mulmod(diff, minv, p);
        residues[i] += modulus * static_cast<unsigned long>(k);
      }
      modulus *= static_cast<unsigned long>(p);
    }
    std::vector<Rational> cand;
    cand.reserve(residues.size());
    for (const auto& u : residues) {
      auto q = rational_reconstruct(u, modulus);
      if (!q) break;
      cand.push_back(std::move(*q));
    }
    if (cand.size() != residues.size()) continue;
    // Verify once the lift has stabilized across one extra prime.
    if (cand == previous && verify(cand)) return cand;
    previous = std::move(cand);
  }
  return std::nullopt;
}

}  // namespace ffl::detail
