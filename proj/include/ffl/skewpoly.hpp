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

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ffl/error.hpp"
#include "ffl/ratfunc.hpp"

namespace ffl {

// Coefficient field, endomorphism and derivation of a skew ring. Supported
// combinations are exactly those where delta is an alpha-derivation:
//   alpha = id,        delta = 0
//   alpha = id,        delta = d/dt   (Q(t) only)
//   alpha = alpha_s,   delta = 0      (t -> t^{s+1}, Q(t) only)
class SkewContext {
 public:
  enum class Field { Q, QT };

  static SkewContext rational() { return SkewContext(Field::Q, 0, false); }
  static SkewContext identity(Field f = Field::QT) { return SkewContext(f, 0, false); }
  static SkewContext differential() { return SkewContext(Field::QT, 0, true); }
  static SkewContext endomorphism(long s) {
    if (s < 1) fail(ErrorKind::InvalidContext, "alpha_s needs s >= 1");
    return SkewContext(Field::QT, s, false);
  }

  SkewContext(Field f, long alpha_s, bool ddt) : field_(f), s_(alpha_s), ddt_(ddt) {
    if (s_ < 0) fail(ErrorKind::InvalidContext, "negative endomorphism index");
    if (s_ > 0 && ddt_) fail(ErrorKind::InvalidContext, "d/dt is not an alpha_s-derivation");
    if (f == Field::Q && (s_ > 0 || ddt_)) fail(ErrorKind::InvalidContext, "Q admits only the trivial alpha and delta");
  }

  Field field() const { return field_; }
  long alpha_index() const { return s_; }  // 0 means identity
  bool has_derivation() const { return ddt_; }
  // Only the identity is surjective on Q(t) among the shipped endomorphisms.
  bool automorphism() const { return s_ == 0; }

  RatFunc alpha(const RatFunc& a) const { return s_ == 0 ? a : a.endo(s_); }
  // alpha^k, using alpha_s^k(t) = t^{(s+1)^k}.
  RatFunc alpha_pow(const RatFunc& a, std::size_t k) const {
    if (s_ == 0 || k == 0 || a.is_constant()) return a;
    std::size_t e = 1;
    for (std::size_t i = 0; i < k; ++i) e *= static_cast<std::size_t>(s_ + 1);
    return RatFunc::normalize(a.num().substitute_power(e), a.den().substitute_power(e));
  }
  RatFunc delta(const RatFunc& a) const { return ddt_ ? a.ddt() : RatFunc(); }

  // Coefficients over Q must be constants.
  void check_coeff(const RatFunc& a) const {
    if (field_ == Field::Q && !a.is_constant()) fail(ErrorKind::InvalidArgument, "non-constant coefficient over Q");
  }

  std::string str() const {
    std::string f = field_ == Field::Q ? "Q" : "Q(t)";
    std::string a = s_ == 0 ? "id" : "t->t^" + std::to_string(s_ + 1);
    return "(" + f + ", alpha=" + a + ", delta=" + (ddt_ ? "d/dt" : "0") + ")";
  }

  friend bool operator==(const SkewContext& a, const SkewContext& b) {
    return a.field_ == b.field_ && a.s_ == b.s_ && a.ddt_ == b.ddt_;
  }
  friend bool operator!=(const SkewContext& a, const SkewContext& b) { return !(a == b); }

 private:
  Field field_;
  long s_;
  bool ddt_;
};

// Element of S[x; alpha, delta] with LEFT coefficients: sum a_i x^i.
class SkewPoly {
 public:
  explicit SkewPoly(SkewContext ctx) : ctx_(ctx) {}
  SkewPoly(SkewContext ctx, std::vector<RatFunc> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
    for (const auto& a : c_) ctx_.check_coeff(a);
    trim();
  }

  static SkewPoly constant(SkewContext ctx, RatFunc a) { return SkewPoly(ctx, {std::move(a)}); }
  static SkewPoly x(SkewContext ctx) { return SkewPoly(ctx, {RatFunc(), RatFunc(1)}); }
  // a x^k
  static SkewPoly monomial(SkewContext ctx, RatFunc a, std::size_t k) {
    std::vector<RatFunc> c(k + 1);
    c[k] = std::move(a);
    return SkewPoly(ctx, std::move(c));
  }

  const SkewContext& context() const { return ctx_; }
  const std::vector<RatFunc>& coeffs() const { return c_; }
  RatFunc coeff(std::size_t i) const { return i < c_.size() ? c_[i] : RatFunc(); }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  friend SkewPoly operator+(const SkewPoly& a, const SkewPoly& b) {
    a.check(b);
    std::vector<RatFunc> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return SkewPoly(a.ctx_, std::move(c));
  }
  friend SkewPoly operator-(const SkewPoly& a, const SkewPoly& b) {
    a.check(b);
    std::vector<RatFunc> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return SkewPoly(a.ctx_, std::move(c));
  }

  // (sum a_i x^i)(sum b_j x^j) = sum a_i (x^i b_j) x^j, where x^i b is
  // expanded with x c = alpha(c) x + delta(c).
  friend SkewPoly operator*(const SkewPoly& f, const SkewPoly& g) {
    f.check(g);
    if (f.is_zero() || g.is_zero()) return SkewPoly(f.ctx_);
    std::vector<RatFunc> out(f.c_.size() + g.c_.size() - 1);
    for (std::size_t j = 0; j < g.c_.size(); ++j) {
      if (g.c_[j].is_zero()) continue;
      std::vector<RatFunc> xb{g.c_[j]};  // left coefficients of x^i * b_j
      for (std::size_t i = 0; i < f.c_.size(); ++i) {
        if (i > 0) xb = f.left_mul_x(xb);
        if (f.c_[i].is_zero()) continue;
        for (std::size_t k = 0; k < xb.size(); ++k) {
          if (xb[k].is_zero()) continue;
          out[k + j] += f.c_[i] * xb[k];
        }
      }
    }
    return SkewPoly(f.ctx_, std::move(out));
  }

  friend bool operator==(const SkewPoly& a, const SkewPoly& b) { return a.ctx_ == b.ctx_ && a.c_ == b.c_; }
  friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }

  // "a0 + (a1)*x + (a2)*x^2"
  std::string str() const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      if (i == 0) {
        out += c_[i].str();
        continue;
      }
      if (!c_[i].is_one()) out += "(" + c_[i].str() + ")*";
      out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return out;
  }

 private:
  std::vector<RatFunc> left_mul_x(const std::vector<RatFunc>& c) const {
    std::vector<RatFunc> r(c.size() + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k].is_zero()) continue;
      r[k + 1] += ctx_.alpha(c[k]);
      if (ctx_.has_derivation()) r[k] += ctx_.delta(c[k]);
    }
    return r;
  }
  void check(const SkewPoly& o) const {
    if (ctx_ != o.ctx_) fail(ErrorKind::ContextMismatch, "skew polynomials over different contexts");
  }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  SkewContext ctx_;
  std::vector<RatFunc> c_;
};

inline SkewPoly sp_mul(const SkewPoly& f, const SkewPoly& g) { return f * g; }

// Sparse y-expansion with RIGHT coefficients: degree n -> a_n meaning y^n a_n.
using SeriesTerms = std::map<long, RatFunc>;

namespace detail {

// Generalized binomial C(n, k) for integer n, k >= 0.
inline Rational binomial(long n, long k) {
  Rational r(1);
  for (long i = 0; i < k; ++i) r = r * Rational::from_int(n - i) / Rational::from_int(i + 1);
  return r;
}

// Lazily extended chain a, delta(a), delta^2(a), ...
class DeltaChain {
 public:
  DeltaChain(const SkewContext& ctx, RatFunc a) : ctx_(&ctx), chain_{std::move(a)} {}
  const RatFunc& operator[](std::size_t j) {
    while (chain_.size() <= j) {
      // d/dt of a polynomial terminates; once zero, stays zero.
      chain_.push_back(chain_.back().is_zero() ? RatFunc() : ctx_->delta(chain_.back()));
    }
    return chain_[j];
  }

 private:
  const SkewContext* ctx_;
  std::vector<RatFunc> chain_;
};

// Adds y^offset * a * y^m * b into `out` as right-coefficient terms,
// keeping degrees <= max_deg. Closed forms of the commutation rule
//   a y = sum_{n>=1} y^n alpha(delta^{n-1}(a)):
//   delta = 0:  a y^m = y^m alpha^m(a)
//   alpha = id: a y^m = sum_j C(m+j-1, j) y^{m+j} delta^j(a)        (m >= 1)
//               a y^-k = sum_{j<=k} (-1)^j C(k, j) y^{-k+j} delta^j(a)
inline void accumulate_a_ypow_b(const SkewContext& ctx, long offset, DeltaChain& a, long m, const RatFunc& b,
                                long max_deg, SeriesTerms& out) {
  auto add = [&](long deg, const RatFunc& v) {
    if (deg > max_deg || v.is_zero()) return;
    auto [it, inserted] = out.try_emplace(deg, v);
    if (!inserted) {
      it->second += v;
      if (it->second.is_zero()) out.erase(it);
    }
  };
  if (!ctx.has_derivation()) {
    if (m < 0 && !ctx.automorphism()) fail(ErrorKind::RequiresAutomorphism, "negative y-power needs alpha surjective");
    add(offset + m, (m >= 0 ? ctx.alpha_pow(a[0], static_cast<std::size_t>(m)) : a[0]) * b);
    return;
  }
  if (m == 0) {
    add(offset, a[0] * b);
  } else if (m > 0) {
    for (long j = 0; offset + m + j <= max_deg; ++j) {
      const RatFunc& d = a[static_cast<std::size_t>(j)];
      if (d.is_zero()) break;
      add(offset + m + j, RatFunc(binomial(m + j - 1, j)) * d * b);
    }
  } else {
    const long k = -m;
    for (long j = 0; j <= k; ++j) {
      const RatFunc& d = a[static_cast<std::size_t>(j)];
      if (d.is_zero()) break;
      Rational c = binomial(k, j);
      if (j % 2) c = -c;
      add(offset + m + j, RatFunc(c) * d * b);
    }
  }
}

// Product of two right-coefficient expansions, truncated at max_deg.
inline SeriesTerms raw_mul(const SkewContext& ctx, const SeriesTerms& f, const SeriesTerms& g, long max_deg) {
  SeriesTerms out;
  if (f.empty() || g.empty()) return out;
  const long vg = g.begin()->first;
  for (const auto& [n, a] : f) {
    if (n + vg > max_deg) break;
    DeltaChain chain(ctx, a);
    for (const auto& [m, b] : g) {
      if (n + m > max_deg) break;
      accumulate_a_ypow_b(ctx, n, chain, m, b, max_deg, out);
    }
  }
  return out;
}

}  // namespace detail

inline constexpr long kDefaultTruncation = 12;

// Element of S((y; alpha, delta)) known modulo y^{D+1}: sum_{n>=v} y^n a_n
// with right coefficients. Negative valuations are representable only when
// alpha is an automorphism.
class SkewSeries {
 public:
  SkewSeries(SkewContext ctx, long trunc) : ctx_(ctx), d_(trunc) {
    if (trunc < 0) fail(ErrorKind::InvalidArgument, "truncation degree must be >= 0");
  }
  SkewSeries(SkewContext ctx, long trunc, SeriesTerms terms) : SkewSeries(ctx, trunc) {
    for (auto& [n, a] : terms) {
      if (n > d_ || a.is_zero()) continue;
      ctx_.check_coeff(a);
      t_.emplace(n, std::move(a));
    }
    if (!t_.empty() && t_.begin()->first < 0 && !ctx_.automorphism()) {
      fail(ErrorKind::RequiresAutomorphism, "negative valuation needs alpha surjective");
    }
  }

  static SkewSeries constant(SkewContext ctx, long trunc, RatFunc a) {
    return SkewSeries(ctx, trunc, SeriesTerms{{0, std::move(a)}});
  }
  static SkewSeries one(SkewContext ctx, long trunc) { return constant(ctx, trunc, RatFunc(1)); }
  static SkewSeries y_pow(SkewContext ctx, long trunc, long n) {
    return SkewSeries(ctx, trunc, SeriesTerms{{n, RatFunc(1)}});
  }
  // sum_{k} y^{v+k} coeffs[k]
  static SkewSeries from_coeffs(SkewContext ctx, long trunc, long valuation, const std::vector<RatFunc>& coeffs) {
    SeriesTerms t;
    for (std::size_t k = 0; k < coeffs.size(); ++k) t.emplace(valuation + static_cast<long>(k), coeffs[k]);
    return SkewSeries(ctx, trunc, std::move(t));
  }

  const SkewContext& context() const { return ctx_; }
  long truncation() const { return d_; }
  const SeriesTerms& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  long valuation() const {
    if (t_.empty()) fail(ErrorKind::ZeroSeries, "valuation of zero series");
    return t_.begin()->first;
  }
  RatFunc coeff(long n) const {
    auto it = t_.find(n);
    return it == t_.end() ? RatFunc() : it->second;
  }

  friend SkewSeries operator+(const SkewSeries& a, const SkewSeries& b) {
    a.check(b);
    SeriesTerms t = a.t_;
    for (const auto& [n, c] : b.t_) t[n] += c;
    return SkewSeries(a.ctx_, a.d_, std::move(t));
  }
  friend SkewSeries operator-(const SkewSeries& a, const SkewSeries& b) {
    a.check(b);
    SeriesTerms t = a.t_;
    for (const auto& [n, c] : b.t_) t[n] -= c;
    return SkewSeries(a.ctx_, a.d_, std::move(t));
  }

  // Exact product of the stored terms, truncated at y^D.
  friend SkewSeries operator*(const SkewSeries& f, const SkewSeries& g) {
    f.check(g);
    return SkewSeries(f.ctx_, f.d_, detail::raw_mul(f.ctx_, f.t_, g.t_, f.d_));
  }

  friend bool operator==(const SkewSeries& a, const SkewSeries& b) {
    return a.ctx_ == b.ctx_ && a.d_ == b.d_ && a.t_ == b.t_;
  }
  friend bool operator!=(const SkewSeries& a, const SkewSeries& b) { return !(a == b); }

  // "a0 + a1*y + a2*y^2 (mod y^13)"; coefficients are right coefficients.
  std::string str() const {
    std::string out;
    for (const auto& [n, a] : t_) {
      if (!out.empty()) out += " + ";
      std::string c = a.str();
      if (n == 0) {
        out += c;
        continue;
      }
      if (!a.is_one()) out += (c.find(' ') != std::string::npos && c.front() != '(' ? "(" + c + ")" : c) + "*";
      out += n == 1 ? "y" : "y^" + std::to_string(n);
    }
    if (out.empty()) out = "0";
    return out + " (mod y^" + std::to_string(d_ + 1) + ")";
  }

 private:
  void check(const SkewSeries& o) const {
    if (ctx_ != o.ctx_) fail(ErrorKind::ContextMismatch, "skew series over different contexts");
    if (d_ != o.d_) fail(ErrorKind::TruncationMismatch, "skew series with different truncation degrees");
  }

  SkewContext ctx_;
  long d_;
  SeriesTerms t_;
};

inline SkewSeries series_mul(const SkewSeries& f, const SkewSeries& g) { return f * g; }

// Inverse by factoring out the lowest term: with v the valuation and a_v
// its coefficient, f = y^v (1 - B) a_v where B = sum_{m>=1} y^m b_m and
// b_m = -a_{v+m} a_v^{-1}. Then f^{-1} = a_v^{-1} (sum_s B^s) y^{-v}.
// The geometric sum is evaluated by Horner's rule at working precision
// D + max(v, 0), which is enough because right multiplication by y^{-v}
// lowers degrees by at most v.
inline SkewSeries series_inv(const SkewSeries& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroSeries, "inverse of zero series");
  const SkewContext& ctx = f.context();
  const long v = f.valuation();
  if (v != 0 && !ctx.automorphism()) {
    fail(ErrorKind::RequiresAutomorphism, "inverting a series of nonzero valuation needs alpha surjective");
  }
  const long work = f.truncation() + std::max(v, 0L);
  const RatFunc lead_inv = f.terms().begin()->second.inverse();

  SeriesTerms b;
  for (const auto& [n, a] : f.terms()) {
    if (n == v) continue;
    b.emplace(n - v, -(a * lead_inv));
  }

  // After k Horner steps g = 1 + B + ... + B^k, which is final below y^{k+1}
  // because B^{k+1} starts at y^{k+1}; so step k only needs degree k + 1.
  SeriesTerms g{{0, RatFunc(1)}};
  for (long step = 0; step < work; ++step) {
    SeriesTerms next = detail::raw_mul(ctx, b, g, step + 1);
    next[0] += RatFunc(1);
    if (next[0].is_zero()) next.erase(0);
    g = std::move(next);
  }
  SeriesTerms scaled = detail::raw_mul(ctx, SeriesTerms{{0, lead_inv}}, g, work);
  SeriesTerms result = detail::raw_mul(ctx, scaled, SeriesTerms{{-v, RatFunc(1)}}, f.truncation());
  return SkewSeries(ctx, f.truncation(), std::move(result));
}

// The ring embedding S[x; alpha, delta] -> S((y; alpha, delta)), x -> y^-1.
inline SkewSeries poly_to_series(const SkewPoly& p, long trunc) {
  const SkewContext& ctx = p.context();
  if (p.degree() > 0 && !ctx.automorphism()) {
    fail(ErrorKind::RequiresAutomorphism, "x -> y^-1 in right-coefficient form needs alpha surjective");
  }
  SeriesTerms out;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i].is_zero()) continue;
    auto term = detail::raw_mul(ctx, SeriesTerms{{0, p.coeffs()[i]}},
                                SeriesTerms{{-static_cast<long>(i), RatFunc(1)}}, trunc);
    for (auto& [n, c] : term) out[n] += c;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return SkewSeries(ctx, trunc, std::move(out));
}

// Image of X_{i_1} ... X_{i_k} under X_i -> t^i x in Q(t)[x; alpha_s].
inline SkewPoly jategaonkar_image(const std::vector<std::uint32_t>& word, long s, long r) {
  if (s < 1) fail(ErrorKind::InvalidArgument, "s must be >= 1");
  if (r > s) fail(ErrorKind::InvalidArgument, "Jategaonkar embedding needs r <= s");
  const SkewContext ctx = SkewContext::endomorphism(s);
  SkewPoly acc = SkewPoly::constant(ctx, RatFunc(1));
  for (auto idx : word) {
    if (static_cast<long>(idx) > r) fail(ErrorKind::IndexOutOfRange, "letter index " + std::to_string(idx) + " > r");
    acc = acc * SkewPoly::monomial(ctx, RatFunc::t_pow(static_cast<long>(idx)), 1);
  }
  return acc;
}

// (e, k) when p = t^e x^k is a single monomial with monic power-of-t
// coefficient; nullopt-like (-1, -1) otherwise.
inline std::pair<long, long> monomial_exponents(const SkewPoly& p) {
  long k = -1;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (p.coeffs()[i].is_zero()) continue;
    if (k >= 0) return {-1, -1};
    k = static_cast<long>(i);
  }
  if (k < 0) return {-1, -1};
  const RatFunc& c = p.coeffs()[static_cast<std::size_t>(k)];
  const QPoly& num = c.num();
  if (c.den().degree() != 0 || num.leading() != Rational(1)) return {-1, -1};
  for (long i = 0; i < num.degree(); ++i)
    if (!num.coeff(static_cast<std::size_t>(i)).is_zero()) return {-1, -1};
  return {num.degree(), k};
}

// x * t^{lhs_exp} == t^{rhs_exp} * x in Q(t)[x; alpha_s].
inline bool skew_relation_holds(long s, std::size_t lhs_exp, std::size_t rhs_exp) {
  const SkewContext ctx = SkewContext::endomorphism(s);
  const SkewPoly x = SkewPoly::x(ctx);
  const SkewPoly lhs = x * SkewPoly::constant(ctx, RatFunc(QPoly::monomial(Rational(1), lhs_exp)));
  const SkewPoly rhs = SkewPoly::constant(ctx, RatFunc(QPoly::monomial(Rational(1), rhs_exp))) * x;
  return lhs == rhs;
}

inline std::size_t upow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) r *= base;
  return r;
}

// Image of S T_i S^-1 = T_{i+1} under T_i -> t^{(s+1)^i}, S -> x.
inline bool gamma_eps_check(std::size_t i, long s) {
  if (s < 1) fail(ErrorKind::InvalidArgument, "s must be >= 1");
  const auto base = static_cast<std::size_t>(s + 1);
  return skew_relation_holds(s, upow(base, i), upow(base, i + 1));
}

}  // namespace ffl
