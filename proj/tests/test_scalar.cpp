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


#include <gtest/gtest.h>

#include <vector>

#include "ffl/field.hpp"
#include "ffl/gen.hpp"
#include "ffl/ratfunc.hpp"
#include "support.hpp"

namespace ffl {
namespace {

using testing::expect_kind;

QPoly P(std::initializer_list<int> coeffs) {
  std::vector<Rational> v;
  for (int c : coeffs) v.emplace_back(c);
  return QPoly(std::move(v));
}

RatFunc R(const char* s) { return RatFunc::parse(s); }

// Plain Euclid on coefficient vectors, independent of the library gcd.
std::vector<Rational> naive_rem(std::vector<Rational> a, const std::vector<Rational>& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational q = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= q * b[i];
    while (!a.empty() && a.back().is_zero()) a.pop_back();
  }
  return a;
}

std::vector<Rational> naive_gcd(std::vector<Rational> a, std::vector<Rational> b) {
  while (!b.empty()) {
    auto r = naive_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  Rational lc = a.back();
  for (auto& c : a) c /= lc;
  return a;
}

TEST(Rational, CanonicalForm) {
  Rational r(mpz_class(6), mpz_class(-4));
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(Rational(0).str(), "0");
  EXPECT_EQ(Rational(mpz_class(0), mpz_class(7)).denominator(), 1);
  EXPECT_EQ(Rational::parse("10/4"), Rational(mpz_class(5), mpz_class(2)));
  EXPECT_EQ(Rational::parse("-7").str(), "-7");
}

TEST(Rational, Errors) {
  expect_kind(ErrorKind::ZeroDenominator, [] { Rational(mpz_class(1), mpz_class(0)); });
  expect_kind(ErrorKind::DivisionByZero, [] { (void)(Rational(1) / Rational(0)); });
  expect_kind(ErrorKind::DivisionByZero, [] { (void)Rational(0).inverse(); });
  expect_kind(ErrorKind::ParseError, [] { (void)Rational::parse("1/x"); });
}

TEST(PrimeField, Arithmetic) {
  PrimeField f;
  EXPECT_EQ(f.p, kMersenne61);
  auto a = f.from_int(-1);
  EXPECT_EQ(a.value(), kMersenne61 - 1);
  EXPECT_TRUE((a + f.one()).is_zero());
  auto h = f.from_rational(Rational(mpz_class(1), mpz_class(2)));
  EXPECT_EQ(h * f.from_int(2), f.one());
  EXPECT_EQ(f.from_int(3) * f.from_int(3).inverse(), f.one());
}

TEST(PrimeField, Errors) {
  expect_kind(ErrorKind::NotPrime, [] { PrimeField(15); });
  PrimeField small(101);
  expect_kind(ErrorKind::ModulusMismatch, [&] { (void)(small.one() + PrimeField().one()); });
  expect_kind(ErrorKind::DivisionByZero, [&] { (void)small.zero().inverse(); });
  expect_kind(ErrorKind::DivisionByZero, [&] { (void)small.from_rational(Rational(mpz_class(1), mpz_class(101))); });
}

TEST(PrimeField, MillerRabin) {
  for (std::uint64_t n = 0; n < 2000; ++n) {
    bool naive = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
      if (n % d == 0) { naive = false; break; }
    }
    EXPECT_EQ(is_prime_u64(n), naive) << n;
  }
  EXPECT_TRUE(is_prime_u64(kMersenne61));
  EXPECT_FALSE(is_prime_u64(1000000007ull * 998244353ull));
  EXPECT_FALSE(is_prime_u64(3215031751ull));  // strong pseudoprime to bases 2, 3, 5, 7
}

TEST(RatFunc, Normalize) {
  RatFunc a = RatFunc::normalize(P({-1, 0, 1}), P({-1, 1}));
  EXPECT_EQ(a.num(), P({1, 1}));
  EXPECT_EQ(a.den(), P({1}));

  RatFunc z = RatFunc::normalize(QPoly(), P({0, 0, 0, 1}));
  EXPECT_TRUE(z.num().is_zero());
  EXPECT_EQ(z.den(), P({1}));

  RatFunc h = RatFunc::normalize(P({0, 2}), P({4}));
  EXPECT_EQ(h.den(), P({1}));
  // Cross-multiplication: num * 4 == 2t * den.
  EXPECT_EQ(h.num() * P({4}), P({0, 2}) * h.den());
  EXPECT_EQ(h.str(), "1/2*t");

  expect_kind(ErrorKind::ZeroDenominator, [] { RatFunc::normalize(P({1}), QPoly()); });
}

TEST(RatFunc, Endo) {
  EXPECT_EQ(RatFunc::t().endo(1), RatFunc::t_pow(2));
  EXPECT_EQ(RatFunc(1).endo(3), RatFunc(1));
  RatFunc f = R("(t + 1)/t");
  EXPECT_EQ(f.endo(2), R("(t^3 + 1)/t^3"));
  RatFunc g = R("t - 2");
  EXPECT_EQ(f.endo(2) * g.endo(2), (f * g).endo(2));
  expect_kind(ErrorKind::InvalidArgument, [] { (void)RatFunc::t().endo(0); });
}

TEST(RatFunc, Derivative) {
  EXPECT_EQ(RatFunc::t_pow(2).ddt(), R("2*t"));
  EXPECT_EQ(RatFunc::t_pow(-1).ddt(), -RatFunc::t_pow(-2));
  RatFunc q = R("(t + 1)/(t - 1)");
  RatFunc expected = R("-2/(t^2 - 2*t + 1)");
  EXPECT_EQ(q.ddt(), expected);
  // Leibniz on (t+1) * (t-1)^{-1}, with the inverse rule for the second factor.
  RatFunc u = R("t + 1"), v = R("t - 1");
  RatFunc vinv = v.inverse();
  RatFunc dvinv = -vinv * v.ddt() * vinv;
  EXPECT_EQ(u.ddt() * vinv + u * dvinv, expected);
}

TEST(RatFunc, TextRoundTrip) {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    RatFunc f = gen::ratfunc(rng);
    EXPECT_EQ(RatFunc::parse(f.str()), f) << f.str();
  }
  EXPECT_EQ(R("t^2 - 1").str(), "(t^2 - 1)");
  EXPECT_EQ(R("(t + 1)/(t - 1)").str(), "(t + 1)/(t - 1)");
  EXPECT_EQ(R("1/(t - 1)").den(), P({-1, 1}));
  expect_kind(ErrorKind::ParseError, [] { (void)RatFunc::parse("t +"); });
  expect_kind(ErrorKind::ZeroDenominator, [] { (void)RatFunc::parse("t/0"); });
}

TEST(RatFunc, GcdMatchesEuclid) {
  // Degrees straddle the switch between the small and modular gcd paths.
  Rng rng(11);
  for (int i = 0; i < 120; ++i) {
    std::size_t dc = static_cast<std::size_t>(rng.uniform(0, 6));
    QPoly c = gen::poly(rng, dc), a = gen::poly(rng, 6), b = gen::poly(rng, 6);
    if (c.is_zero() || a.is_zero() || b.is_zero()) continue;
    QPoly x = a * c, y = b * c;
    PolyGcd g = gcd_cofactors(x, y);
    auto oracle = naive_gcd(x.coeffs(), y.coeffs());
    EXPECT_EQ(g.g, QPoly(oracle));
    EXPECT_EQ(g.g * g.a_over_g, x);
    EXPECT_EQ(g.g * g.b_over_g, y);
  }
}

TEST(RatFunc, GcdLargeCoefficients) {
  QPoly base = P({1, 1});
  QPoly c = P({123456789, -987654321, 555555555, 1});
  QPoly x = c, y = c * P({3, 0, 7});
  for (int k = 0; k < 6; ++k) x *= base;
  EXPECT_EQ(QPoly::gcd(x, y), c.monic());
}

template <class T, class Gen>
void field_axioms(Gen&& gen, const T& zero, const T& one) {
  for (int i = 0; i < 200; ++i) {
    T a = gen(), b = gen(), c = gen();
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + zero, a);
    EXPECT_EQ(a * one, a);
    EXPECT_EQ(a - a, zero);
    if (!(a == zero)) {
      EXPECT_EQ(a * a.inverse(), one);
    }
  }
}

TEST(Properties, FieldAxiomsRational) {
  Rng rng(1);
  field_axioms<Rational>([&] { return gen::small_rational(rng, 50); }, Rational(0), Rational(1));
}

TEST(Properties, FieldAxiomsPrime) {
  Rng rng(2);
  PrimeField f;
  field_axioms<PrimeFieldElt>([&] { return f.random(rng); }, f.zero(), f.one());
  PrimeField small(7);
  field_axioms<PrimeFieldElt>([&] { return small.random(rng); }, small.zero(), small.one());
}

TEST(Properties, FieldAxiomsRatFunc) {
  Rng rng(3);
  field_axioms<RatFunc>([&] { return gen::ratfunc(rng); }, RatFunc(0), RatFunc(1));
}

TEST(Properties, NormalFormInvariant) {
  Rng rng(4);
  for (int i = 0; i < 200; ++i) {
    RatFunc f = gen::ratfunc(rng) * gen::nonzero_ratfunc(rng) + gen::ratfunc(rng);
    EXPECT_TRUE(f.den().leading().is_one());
    if (!f.is_zero()) {
      EXPECT_EQ(QPoly::gcd(f.num(), f.den()), P({1}));
    } else {
      EXPECT_EQ(f.den(), P({1}));
    }
  }
}

TEST(Properties, EndoInjectiveAndHomomorphic) {
  Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    long s = rng.uniform(1, 3);
    RatFunc f = gen::ratfunc(rng), g = gen::ratfunc(rng);
    EXPECT_EQ(f.endo(s) == g.endo(s), f == g);
    EXPECT_EQ((f + g).endo(s), f.endo(s) + g.endo(s));
    EXPECT_EQ((f * g).endo(s), f.endo(s) * g.endo(s));
    // Injectivity on a nontrivial pair as well.
    RatFunc h = f + RatFunc(1);
    EXPECT_NE(f.endo(s), h.endo(s));
  }
}

TEST(Properties, DerivationRules) {
  Rng rng(6);
  for (int i = 0; i < 100; ++i) {
    RatFunc f = gen::nonzero_ratfunc(rng), g = gen::ratfunc(rng);
    EXPECT_EQ((f * g).ddt(), f.ddt() * g + f * g.ddt());
    EXPECT_EQ((f + g).ddt(), f.ddt() + g.ddt());
    RatFunc fi = f.inverse();
    EXPECT_EQ(fi.ddt(), -fi * f.ddt() * fi);
  }
}

}  // namespace
}  // namespace ffl
