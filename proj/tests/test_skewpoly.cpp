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

#include <set>

#include "ffl/gen.hpp"
#include "ffl/skewpoly.hpp"
#include "support.hpp"

namespace ffl {

void PrintTo(const SkewSeries& s, std::ostream* os) { *os << s.str(); }
void PrintTo(const SkewPoly& p, std::ostream* os) { *os << p.str(); }

namespace {

using testing::expect_kind;
using Field = SkewContext::Field;

RatFunc R(const char* s) { return RatFunc::parse(s); }

// Terms of s at degrees <= d.
SeriesTerms below(const SkewSeries& s, long d) {
  SeriesTerms out;
  for (const auto& [n, c] : s.terms())
    if (n <= d) out.emplace(n, c);
  return out;
}

std::vector<SkewContext> all_contexts() {
  return {SkewContext::rational(), SkewContext::identity(), SkewContext::differential(),
          SkewContext::endomorphism(1), SkewContext::endomorphism(2)};
}

RatFunc coeff_for(Rng& rng, const SkewContext& ctx) {
  return ctx.field() == Field::Q ? RatFunc(gen::small_rational(rng)) : gen::ratfunc(rng);
}

SkewPoly random_poly(Rng& rng, const SkewContext& ctx, std::size_t max_deg = 2) {
  std::vector<RatFunc> c(static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_deg) + 1)));
  for (auto& a : c) a = coeff_for(rng, ctx);
  return SkewPoly(ctx, std::move(c));
}

// Oracle for right multiplication by y, straight from the commutation rule
// a y = sum_{n>=1} y^n alpha(delta^{n-1}(a)), applied term by term.
SeriesTerms oracle_times_y(const SkewContext& ctx, const SeriesTerms& f, long max_deg) {
  SeriesTerms out;
  for (const auto& [k, c] : f) {
    RatFunc d = c;
    for (long n = 1; k + n <= max_deg && !d.is_zero(); ++n) {
      out[k + n] += ctx.alpha(d);
      d = ctx.delta(d);
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

TEST(SkewContext, Construction) {
  expect_kind(ErrorKind::InvalidContext, [] { SkewContext(Field::QT, 1, true); });
  expect_kind(ErrorKind::InvalidContext, [] { SkewContext(Field::Q, 0, true); });
  expect_kind(ErrorKind::InvalidContext, [] { SkewContext::endomorphism(0); });
  EXPECT_TRUE(SkewContext::differential().automorphism());
  EXPECT_FALSE(SkewContext::endomorphism(1).automorphism());
  EXPECT_EQ(SkewContext::endomorphism(1).str(), "(Q(t), alpha=t->t^2, delta=0)");
  expect_kind(ErrorKind::InvalidArgument, [] { SkewPoly::constant(SkewContext::rational(), RatFunc::t()); });
}

TEST(SkewPoly, Examples) {
  auto a1 = SkewContext::endomorphism(1);
  EXPECT_EQ(sp_mul(SkewPoly::x(a1), SkewPoly::constant(a1, RatFunc::t())), SkewPoly::monomial(a1, R("t^2"), 1));

  auto dd = SkewContext::differential();
  EXPECT_EQ(sp_mul(SkewPoly::x(dd), SkewPoly::constant(dd, RatFunc::t())), SkewPoly(dd, {RatFunc(1), RatFunc::t()}));
  EXPECT_EQ(SkewPoly(dd, {RatFunc(1), RatFunc::t()}).str(), "1 + (t)*x");

  for (const auto& ctx : all_contexts()) {
    EXPECT_EQ(sp_mul(SkewPoly::x(ctx), SkewPoly::x(ctx)), SkewPoly::monomial(ctx, RatFunc(1), 2));
  }
  expect_kind(ErrorKind::ContextMismatch, [&] { (void)sp_mul(SkewPoly::x(a1), SkewPoly::x(dd)); });
}

TEST(SkewSeries, Examples) {
  auto dd = SkewContext::differential();
  const long D = 4;
  auto t = SkewSeries::constant(dd, D, RatFunc::t());
  auto y = SkewSeries::y_pow(dd, D, 1);
  EXPECT_EQ(series_mul(t, y), SkewSeries(dd, D, {{1, RatFunc::t()}, {2, RatFunc(1)}}));

  Rng rng(3);
  auto g = gen::series(rng, dd, D, 0, 4);
  EXPECT_EQ(series_mul(SkewSeries::one(dd, D), g), g);

  auto yt = series_mul(y, t);
  EXPECT_EQ(series_mul(yt, yt), SkewSeries(dd, D, {{2, R("t^2")}, {3, RatFunc::t()}}));
  EXPECT_EQ(series_mul(yt, yt), series_mul(series_mul(series_mul(y, t), y), t));
  EXPECT_EQ(yt.str(), "t*y (mod y^5)");

  expect_kind(ErrorKind::ContextMismatch, [&] { (void)(t * SkewSeries::one(SkewContext::identity(), D)); });
  expect_kind(ErrorKind::TruncationMismatch, [&] { (void)(t * SkewSeries::one(dd, D + 1)); });
}

TEST(SkewSeries, InverseExamples) {
  auto q = SkewContext::rational();
  auto f = SkewSeries(q, 5, {{0, RatFunc(1)}, {1, RatFunc(-1)}});
  SeriesTerms geo;
  for (long k = 0; k <= 5; ++k) geo.emplace(k, RatFunc(1));
  EXPECT_EQ(series_inv(f), SkewSeries(q, 5, geo));

  auto id = SkewContext::identity();
  EXPECT_EQ(series_inv(SkewSeries::constant(id, 6, RatFunc::t())), SkewSeries::constant(id, 6, RatFunc::t_pow(-1)));

  auto dd = SkewContext::differential();
  auto h = SkewSeries(dd, 3, {{0, RatFunc(1)}, {1, RatFunc::t()}});
  auto hi = series_inv(h);
  EXPECT_EQ(series_mul(h, hi), SkewSeries::one(dd, 3));
  EXPECT_EQ(series_mul(hi, h), SkewSeries::one(dd, 3));

  expect_kind(ErrorKind::ZeroSeries, [&] { (void)series_inv(SkewSeries(dd, 3)); });
  expect_kind(ErrorKind::ZeroSeries, [&] { (void)SkewSeries(dd, 3).valuation(); });
}

TEST(SkewSeries, NegativeValuation) {
  auto a1 = SkewContext::endomorphism(1);
  expect_kind(ErrorKind::RequiresAutomorphism, [&] { SkewSeries::y_pow(a1, 4, -1); });
  expect_kind(ErrorKind::RequiresAutomorphism, [&] { (void)series_inv(SkewSeries::y_pow(a1, 4, 1)); });
  expect_kind(ErrorKind::RequiresAutomorphism, [&] { (void)poly_to_series(SkewPoly::x(a1), 4); });

  auto dd = SkewContext::differential();
  const long D = 6;
  auto y = SkewSeries::y_pow(dd, D, 1);
  auto yinv = series_inv(y);
  EXPECT_EQ(yinv, SkewSeries::y_pow(dd, D, -1));
  // a y^-1 = y^-1 a - delta(a) when alpha = id.
  auto t = SkewSeries::constant(dd, D, RatFunc::t());
  EXPECT_EQ(series_mul(t, yinv), SkewSeries(dd, D, {{-1, RatFunc::t()}, {0, RatFunc(-1)}}));
}

TEST(SkewSeries, CommutationMatchesIteratedRule) {
  Rng rng(9);
  const long D = 8;
  for (const auto& ctx : all_contexts()) {
    for (int trial = 0; trial < 20; ++trial) {
      RatFunc a = coeff_for(rng, ctx);
      SeriesTerms iter{{0, a}};
      if (a.is_zero()) iter.clear();
      for (long m = 0; m <= 6; ++m) {
        auto closed = series_mul(SkewSeries::constant(ctx, D, a), SkewSeries::y_pow(ctx, D, m));
        EXPECT_EQ(closed, SkewSeries(ctx, D, iter)) << ctx.str() << " a=" << a << " m=" << m;
        iter = oracle_times_y(ctx, iter, D);
      }
      if (ctx.automorphism() && !a.is_zero()) {
        for (long k = 1; k <= 4; ++k) {
          auto ak = series_mul(SkewSeries::constant(ctx, D, a), SkewSeries::y_pow(ctx, D, -k));
          EXPECT_EQ(series_mul(ak, SkewSeries::y_pow(ctx, D, k)), SkewSeries::constant(ctx, D, a));
        }
      }
    }
  }
}

TEST(SkewSeries, NegativePowerRuleIsFinite) {
  // a y^-k = sum_{j<=k} (-1)^j C(k,j) y^{-k+j} delta^j(a) for alpha = id.
  auto dd = SkewContext::differential();
  const long D = 6;
  RatFunc a = R("t^3 + 2*t");
  for (long k = 1; k <= 4; ++k) {
    SeriesTerms expect;
    RatFunc d = a;
    Rational binom(1);
    for (long j = 0; j <= k && !d.is_zero(); ++j) {
      expect[-k + j] += RatFunc(j % 2 ? -binom : binom) * d;
      d = d.ddt();
      binom = binom * Rational::from_int(k - j) / Rational::from_int(j + 1);
    }
    EXPECT_EQ(series_mul(SkewSeries::constant(dd, D, a), SkewSeries::y_pow(dd, D, -k)), SkewSeries(dd, D, expect));
  }
}

TEST(SkewPoly, Jategaonkar) {
  auto a1 = SkewContext::endomorphism(1);
  EXPECT_EQ(jategaonkar_image({1}, 1, 1), SkewPoly::monomial(a1, RatFunc::t(), 1));
  EXPECT_EQ(jategaonkar_image({0, 1}, 1, 1), SkewPoly::monomial(a1, R("t^2"), 2));
  EXPECT_EQ(jategaonkar_image({1, 0}, 1, 1), SkewPoly::monomial(a1, RatFunc::t(), 2));
  for (long s = 1; s <= 3; ++s) {
    EXPECT_EQ(jategaonkar_image({}, s, s), SkewPoly::constant(SkewContext::endomorphism(s), RatFunc(1)));
  }
  expect_kind(ErrorKind::IndexOutOfRange, [] { (void)jategaonkar_image({0, 2}, 2, 1); });
  expect_kind(ErrorKind::InvalidArgument, [] { (void)jategaonkar_image({0}, 1, 2); });
}

TEST(SkewPoly, JategaonkarInjective) {
  for (long s = 1; s <= 3; ++s) {
    const long r = s;
    std::set<std::pair<long, long>> seen;
    std::size_t total = 0;
    std::vector<std::vector<std::uint32_t>> layer{{}};
    for (std::size_t len = 0; len <= 4; ++len) {
      std::vector<std::vector<std::uint32_t>> next;
      for (const auto& w : layer) {
        auto [e, k] = monomial_exponents(jategaonkar_image(w, s, r));
        long expect_e = 0, place = 1;
        for (auto idx : w) {
          expect_e += static_cast<long>(idx) * place;
          place *= s + 1;
        }
        EXPECT_EQ(k, static_cast<long>(w.size()));
        EXPECT_EQ(e, expect_e);
        seen.insert({e, k});
        ++total;
        for (std::uint32_t a = 0; a <= static_cast<std::uint32_t>(r); ++a) {
          auto v = w;
          v.push_back(a);
          next.push_back(std::move(v));
        }
      }
      layer = std::move(next);
    }
    EXPECT_EQ(seen.size(), total) << "s=" << s;
  }
}

TEST(SkewPoly, GammaEps) {
  EXPECT_TRUE(gamma_eps_check(0, 1));
  EXPECT_TRUE(gamma_eps_check(2, 2));
  EXPECT_TRUE(skew_relation_holds(2, 9, 27));
  EXPECT_FALSE(skew_relation_holds(1, 1, 3));
  for (long s = 1; s <= 3; ++s)
    for (std::size_t i = 0; i <= 4; ++i) EXPECT_TRUE(gamma_eps_check(i, s)) << s << " " << i;
}

TEST(Properties, AlphaDerivation) {
  Rng rng(1);
  for (const auto& ctx : all_contexts()) {
    for (int i = 0; i < 200; ++i) {
      RatFunc a = coeff_for(rng, ctx), b = coeff_for(rng, ctx);
      EXPECT_EQ(ctx.delta(a * b), ctx.delta(a) * b + ctx.alpha(a) * ctx.delta(b)) << ctx.str();
      EXPECT_EQ(ctx.delta(a + b), ctx.delta(a) + ctx.delta(b));
      EXPECT_EQ(ctx.alpha(a * b), ctx.alpha(a) * ctx.alpha(b));
      EXPECT_EQ(ctx.alpha(a + b), ctx.alpha(a) + ctx.alpha(b));
      EXPECT_EQ(ctx.alpha_pow(a, 2), ctx.alpha(ctx.alpha(a)));
    }
  }
}

TEST(Properties, SeriesAssociativity) {
  Rng rng(2);
  const long D = 8;
  for (const auto& ctx : all_contexts()) {
    for (int i = 0; i < 100; ++i) {
      const long lo = ctx.automorphism() ? -1 : 0;
      auto f = gen::series(rng, ctx, D, rng.uniform(lo, 1), 3);
      auto g = gen::series(rng, ctx, D, rng.uniform(lo, 1), 3);
      auto h = gen::series(rng, ctx, D, rng.uniform(lo, 1), 3);
      auto lhs = series_mul(series_mul(f, g), h), rhs = series_mul(f, series_mul(g, h));
      const long vmin = std::min(0L, f.valuation()) + std::min(0L, g.valuation()) + std::min(0L, h.valuation());
      if (vmin == 0) {
        EXPECT_EQ(lhs, rhs) << ctx.str() << " f=" << f.str() << " g=" << g.str() << " h=" << h.str();
      } else {
        // A factor of valuation -k consumes k degrees of the stored precision.
        EXPECT_EQ(below(lhs, D + vmin), below(rhs, D + vmin)) << ctx.str();
      }
    }
  }
}

void check_inverse_two_sided(const SkewContext& ctx, long D, int count, long vlo, long vhi, std::uint64_t seed) {
  Rng rng(seed);
  const auto one = SkewSeries::one(ctx, D);
  for (int i = 0; i < count; ++i) {
    const long v = rng.uniform(vlo, vhi);
    auto f = gen::series(rng, ctx, D, v, 4);
    auto g = series_inv(f);
    if (v >= 0) {
      EXPECT_EQ(series_mul(f, g), one) << ctx.str() << " v=" << v;
      EXPECT_EQ(series_mul(g, f), one) << ctx.str() << " v=" << v;
    } else {
      // g is stored through y^D only, so a product with f (valuation v < 0)
      // is determined through y^{D+v}.
      EXPECT_EQ(below(series_mul(f, g), D + v), one.terms()) << ctx.str() << " v=" << v;
      EXPECT_EQ(below(series_mul(g, f), D + v), one.terms()) << ctx.str() << " v=" << v;
    }
    EXPECT_EQ(g.valuation(), -v);
  }
}

TEST(Properties, SeriesInverseTwoSided) {
  check_inverse_two_sided(SkewContext::rational(), 12, 50, -2, 2, 31);
  check_inverse_two_sided(SkewContext::identity(), 12, 50, -2, 2, 32);
  check_inverse_two_sided(SkewContext::differential(), 12, 50, -1, 1, 33);
}

TEST(Properties, SeriesInverseTwoSidedEndomorphism) {
  // alpha_s^k(t) = t^{(s+1)^k}, so coefficient degrees grow exponentially in
  // the truncation degree; a smaller D keeps the exact check tractable.
  check_inverse_two_sided(SkewContext::endomorphism(1), 6, 50, 0, 0, 34);
  check_inverse_two_sided(SkewContext::endomorphism(2), 4, 50, 0, 0, 35);
}

TEST(Properties, DegreeAdditivity) {
  Rng rng(4);
  for (const auto& ctx : all_contexts()) {
    for (int i = 0; i < 100; ++i) {
      auto f = random_poly(rng, ctx, 3), g = random_poly(rng, ctx, 3);
      if (f.is_zero() || g.is_zero()) continue;
      EXPECT_EQ(sp_mul(f, g).degree(), f.degree() + g.degree());
      // Associativity of the polynomial product as well.
      auto h = random_poly(rng, ctx, 2);
      EXPECT_EQ(sp_mul(sp_mul(f, g), h), sp_mul(f, sp_mul(g, h)));
    }
  }
}

TEST(Properties, PolynomialsEmbedInSeries) {
  Rng rng(5);
  const long D = 4;
  for (const auto& ctx : {SkewContext::rational(), SkewContext::identity(), SkewContext::differential()}) {
    for (int i = 0; i < 100; ++i) {
      auto f = random_poly(rng, ctx, 2), g = random_poly(rng, ctx, 2);
      EXPECT_EQ(poly_to_series(sp_mul(f, g), D), series_mul(poly_to_series(f, D), poly_to_series(g, D)))
          << ctx.str() << " f=" << f.str() << " g=" << g.str();
    }
  }
  // x maps to y^-1.
  auto dd = SkewContext::differential();
  EXPECT_EQ(poly_to_series(SkewPoly::x(dd), D), SkewSeries::y_pow(dd, D, -1));
}

}  // namespace
}  // namespace ffl
