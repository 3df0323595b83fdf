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
#include <string>

#include "ffl/error.hpp"
#include "ffl/prime_field.hpp"
#include "ffl/rational.hpp"
#include "ffl/rng.hpp"

namespace ffl {

// Field descriptors. Generic algorithms take one of these by const
// reference and obtain constants and random draws through it.

struct RationalField {
  using value_type = Rational;

  // Random draws are small integers, which keeps exact Q evaluation cheap.
  std::int64_t sample_bound = 9;

  value_type zero() const { return Rational(0); }
  value_type one() const { return Rational(1); }
  value_type from_rational(const Rational& r) const { return r; }
  value_type from_int(std::int64_t v) const { return Rational::from_int(v); }
  value_type random(Rng& rng) const { return from_int(rng.uniform(-sample_bound, sample_bound)); }
  std::string name() const { return "q"; }
};

struct PrimeField {
  using value_type = PrimeFieldElt;

  std::uint64_t p = kMersenne61;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t modulus) : p(modulus) {
    if (!is_prime_u64(modulus)) fail(ErrorKind::NotPrime, std::to_string(modulus) + " is not prime");
  }

  value_type zero() const { return {0, p}; }
  value_type one() const { return {1, p}; }
  value_type from_int(std::int64_t v) const { return PrimeFieldElt::from_int(v, p); }
  value_type from_rational(const Rational& r) const {
    mpz_class n = r.numerator() % mpz_class(static_cast<unsigned long>(p));
    if (n < 0) n += static_cast<unsigned long>(p);
    mpz_class d = r.denominator() % mpz_class(static_cast<unsigned long>(p));
    if (d == 0) fail(ErrorKind::DivisionByZero, "denominator vanishes modulo p");
    return value_type(n.get_ui(), p) / value_type(d.get_ui(), p);
  }
  value_type random(Rng& rng) const { return {rng.below(p), p}; }
  std::string name() const { return "fp"; }
};

}  // namespace ffl
