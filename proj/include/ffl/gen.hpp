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
#include <functional>
#include <string>
#include <vector>

#include "ffl/freegroup.hpp"
#include "ffl/ratexpr.hpp"
#include "ffl/ratfunc.hpp"
#include "ffl/rng.hpp"
#include "ffl/skewpoly.hpp"

// Seeded random instances shared by the CLI batteries and the tests.
namespace ffl::gen {

inline Rational small_rational(Rng& rng, std::int64_t bound = 5) {
  std::int64_t num = rng.uniform(-bound, bound);
  std::int64_t den = rng.uniform(1, 3);
  return Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
}

inline Rational nonzero_rational(Rng& rng, std::int64_t bound = 5) {
  for (;;) {
    Rational r = small_rational(rng, bound);
    if (!r.is_zero()) return r;
  }
}

inline QPoly poly(Rng& rng, std::size_t max_deg) {
  std::vector<Rational> c;
  const auto deg = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_deg)));
  for (std::size_t k = 0; k <= deg; ++k) c.push_back(small_rational(rng));
  return QPoly(std::move(c));
}

// num of degree <= 2, nonzero den of degree <= 1.
inline RatFunc ratfunc(Rng& rng) {
  QPoly den;
  while (den.is_zero()) den = poly(rng, 1);
  return RatFunc::normalize(poly(rng, 2), den);
}

inline RatFunc nonzero_ratfunc(Rng& rng) {
  for (;;) {
    RatFunc r = ratfunc(rng);
    if (!r.is_zero()) return r;
  }
}

// Coefficients drawn for degrees v .. v + len - 1 (nonzero at v).
inline SkewSeries series(Rng& rng, const SkewContext& ctx, long trunc, long valuation, std::size_t len) {
  const bool field_q = ctx.field() == SkewContext::Field::Q;
  SeriesTerms t;
  for (std::size_t k = 0; k < len; ++k) {
    RatFunc c = field_q ? RatFunc(small_rational(rng)) : ratfunc(rng);
    if (k == 0) c = field_q ? RatFunc(nonzero_rational(rng)) : nonzero_ratfunc(rng);
    t.emplace(valuation + static_cast<long>(k), c);
  }
  return SkewSeries(ctx, trunc, std::move(t));
}

// Reduced word with at most max_syllables syllables and |exponent| <= max_exp.
inline GroupWord group_word(Rng& rng, std::uint32_t gens, std::size_t max_syllables, long max_exp = 3) {
  std::vector<Syllable> seq;
  const auto len = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_syllables)));
  while (seq.size() < len) {
    auto g = static_cast<std::uint32_t>(rng.below(gens));
    if (!seq.empty() && seq.back().gen == g) continue;
    long e = 0;
    while (e == 0) e = rng.uniform(-max_exp, max_exp);
    seq.push_back({g, e});
  }
  return GroupWord::reduce(seq);
}

inline GroupAlgElt group_alg(Rng& rng, std::uint32_t gens, std::size_t max_terms, std::size_t max_syllables) {
  for (;;) {
    GroupAlgElt f;
    const auto n = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_terms)));
    for (std::size_t k = 0; k < n; ++k) f.add_term(group_word(rng, gens, max_syllables), nonzero_rational(rng));
    if (!f.terms().empty()) return f;
  }
}

struct ExprOptions {
  std::size_t depth = 3;
  bool allow_inverse = true;
  double inverse_rate = 0.25;
};

// Random DAG over the given variables. Subterms are reused from earlier
// draws, so the result is a genuine DAG rather than a tree.
inline Expr expr(Rng& rng, ExprPool& pool, const std::vector<Expr>& vars, const ExprOptions& opt = {}) {
  std::vector<Expr> made;
  std::function<Expr(std::size_t)> go = [&](std::size_t depth) -> Expr {
    if (!made.empty() && rng.below(5) == 0) return made[rng.below(made.size())];
    Expr e;
    if (depth == 0 || rng.below(4) == 0) {
      e = rng.below(5) == 0 ? pool.constant(nonzero_rational(rng, 3)) : vars[rng.below(vars.size())];
    } else if (opt.allow_inverse && static_cast<double>(rng.below(1000)) < opt.inverse_rate * 1000) {
      e = pool.inv(go(depth - 1));
    } else if (rng.coin()) {
      std::vector<Expr> terms;
      const std::size_t n = 2 + rng.below(2);
      for (std::size_t k = 0; k < n; ++k) {
        Expr c = go(depth - 1);
        terms.push_back(rng.below(3) == 0 ? pool.neg(c) : c);
      }
      e = pool.add(terms);
    } else {
      Expr l = go(depth - 1);
      e = pool.mul(l, go(depth - 1));
    }
    made.push_back(e);
    return e;
  };
  return go(opt.depth);
}

}  // namespace ffl::gen
