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

#include <cstdint>
#include <ostream>
#include <string>

#include "ffl/error.hpp"

namespace ffl {

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  base %= m;
  while (e) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

// Deterministic Miller-Rabin; the witness set is exact for all 64-bit inputs.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) { d >>= 1; ++s; }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = detail::mulmod(x, x, n);
      if (x == n - 1) { composite = false; break; }
    }
    if (composite) return false;
  }
  return true;
}

// Element of Z/pZ. The modulus travels with the value so that a
// configurable prime needs no global state; mixing moduli is an error.
class PrimeFieldElt {
 public:
  PrimeFieldElt() = default;
  PrimeFieldElt(std::uint64_t value, std::uint64_t modulus) : v_(value % modulus), p_(modulus) {}

  static PrimeFieldElt from_int(std::int64_t v, std::uint64_t modulus) {
    if (v >= 0) return {static_cast<std::uint64_t>(v), modulus};
    std::uint64_t m = static_cast<std::uint64_t>(-(v + 1)) % modulus;  // avoids overflow at INT64_MIN
    return {modulus - 1 - m, modulus};
  }

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  PrimeFieldElt inverse() const {
    if (v_ == 0) fail(ErrorKind::DivisionByZero, "inverse of zero in prime field");
    return {detail::powmod(v_, p_ - 2, p_), p_};
  }

  PrimeFieldElt& operator+=(const PrimeFieldElt& o) {
    check(o);
    v_ += o.v_;
    if (v_ >= p_ || v_ < o.v_) v_ -= p_;
    return *this;
  }
  PrimeFieldElt& operator-=(const PrimeFieldElt& o) {
    check(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + (p_ - o.v_);
    return *this;
  }
  PrimeFieldElt& operator*=(const PrimeFieldElt& o) {
    check(o);
    v_ = detail::mulmod(v_, o.v_, p_);
    return *this;
  }
  PrimeFieldElt& operator/=(const PrimeFieldElt& o) { return *this *= o.inverse(); }

  friend PrimeFieldElt operator+(PrimeFieldElt a, const PrimeFieldElt& b) { return a += b; }
  friend PrimeFieldElt operator-(PrimeFieldElt a, const PrimeFieldElt& b) { return a -= b; }
  friend PrimeFieldElt operator*(PrimeFieldElt a, const PrimeFieldElt& b) { return a *= b; }
  friend PrimeFieldElt operator/(PrimeFieldElt a, const PrimeFieldElt& b) { return a /= b; }
  friend PrimeFieldElt operator-(const PrimeFieldElt& a) { return {a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_}; }

  friend bool operator==(const PrimeFieldElt& a, const PrimeFieldElt& b) { return a.v_ == b.v_ && a.p_ == b.p_; }
  friend bool operator!=(const PrimeFieldElt& a, const PrimeFieldElt& b) { return !(a == b); }

  std::string str() const { return std::to_string(v_); }
  friend std::ostream& operator<<(std::ostream& os, const PrimeFieldElt& x) { return os << x.v_; }

 private:
  void check(const PrimeFieldElt& o) const {
    if (o.p_ != p_) fail(ErrorKind::ModulusMismatch, "operands over different primes");
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = kMersenne61;
};

}  // namespace ffl
