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
#include <cctype>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ffl/error.hpp"
#include "ffl/polygcd.hpp"
#include "ffl/rational.hpp"

namespace ffl {

// Dense univariate polynomial over Q in the variable t, coefficients stored
// from degree 0 upward with no trailing zeros.
class QPoly {
 public:
  QPoly() = default;
  QPoly(Rational c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) c_.push_back(std::move(c));
  }
  explicit QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPoly monomial(Rational c, std::size_t deg) {
    std::vector<Rational> v(deg + 1);
    v[deg] = std::move(c);
    return QPoly(std::move(v));
  }
  static QPoly t() { return monomial(Rational(1), 1); }

  bool is_zero() const { return c_.empty(); }
  // Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
  bool is_constant() const { return c_.size() <= 1; }

  QPoly& operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  QPoly& operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator-(const QPoly& a) { return QPoly() - a; }
  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return QPoly(std::move(r));
  }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

  QPoly scaled(const Rational& s) const {
    if (s.is_zero()) return {};
    QPoly r = *this;
    for (auto& x : r.c_) x *= s;
    return r;
  }

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const QPoly& a, const QPoly& b) { return !(a == b); }

  // Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
    QPoly r = a;
    if (a.degree() < b.degree()) return {QPoly(), r};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const Rational lead_inv = b.leading().inverse();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
      Rational f = r.leading() * lead_inv;
      for (std::size_t i = 0; i < b.c_.size(); ++i) r.c_[i + shift] -= f * b.c_[i];
      q[shift] = f;
      r.trim();
    }
    return {QPoly(std::move(q)), r};
  }

  QPoly monic() const {
    if (is_zero()) return {};
    return scaled(leading().inverse());
  }

  // Monic gcd; gcd(0, 0) = 0.
  static QPoly gcd(const QPoly& a, const QPoly& b);

  QPoly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational::from_int(static_cast<std::int64_t>(i));
    return QPoly(std::move(r));
  }

  // p(t) -> p(t^k)
  QPoly substitute_power(std::size_t k) const {
    if (is_zero()) return {};
    std::vector<Rational> r((c_.size() - 1) * k + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i * k] = c_[i];
    return QPoly(std::move(r));
  }

  Rational eval(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  // Terms in descending degree, e.g. "t^2 - 1/2*t + 3"; zero prints as "0".
  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
      const Rational& c = c_[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      Rational mag = c.sign() < 0 ? -c : c;
      if (first) {
        if (c.sign() < 0) out += "-";
      } else {
        out += c.sign() < 0 ? " - " : " + ";
      }
      first = false;
      if (i == 0) {
        out += mag.str();
        continue;
      }
      if (!mag.is_one()) out += mag.str() + "*";
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const QPoly& p) { return os << p.str(); }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

// Monic gcd with cofactors a / g and b / g; a and b must not both be zero.
// Small inputs use the Euclidean algorithm with monic remainders, larger
// ones the modular algorithm, whose candidate is confirmed by the exact
// divisions that also produce the cofactors.
struct PolyGcd {
  QPoly g;
  QPoly a_over_g;
  QPoly b_over_g;
};

inline PolyGcd gcd_cofactors(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) fail(ErrorKind::DivisionByZero, "gcd(0, 0) has no cofactors");
  if (a.is_zero()) return {b.monic(), QPoly(), QPoly(b.leading())};
  if (b.is_zero()) return {a.monic(), QPoly(a.leading()), QPoly()};
  if (a.degree() == 0 || b.degree() == 0) return {QPoly(Rational(1)), a, b};
  if (a.degree() + b.degree() > 6) {
    PolyGcd out;
    auto divides = [&](const std::vector<Rational>& c) {
      QPoly g{std::vector<Rational>(c)};
      auto [qa, ra] = QPoly::divmod(a, g);
      if (!ra.is_zero()) return false;
      auto [qb, rb] = QPoly::divmod(b, g);
      if (!rb.is_zero()) return false;
      out = {std::move(g), std::move(qa), std::move(qb)};
      return true;
    };
    if (auto g = detail::modular_gcd(a.coeffs(), b.coeffs(), divides)) {
      if (g->empty()) return {QPoly(Rational(1)), a, b};
      return out;
    }
  }
  QPoly x = a.degree() >= b.degree() ? a : b;
  QPoly y = (a.degree() >= b.degree() ? b : a).monic();
  while (!y.is_zero()) {
    QPoly r = QPoly::divmod(x, y).second.monic();
    x = std::move(y);
    y = std::move(r);
  }
  if (x.degree() == 0) return {QPoly(Rational(1)), a, b};
  return {x, QPoly::divmod(a, x).first, QPoly::divmod(b, x).first};
}

inline QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  return gcd_cofactors(a, b).g;
}

// Element of Q(t): num/den with den monic and gcd(num, den) = 1.
class RatFunc {
 public:
  RatFunc() : den_(Rational(1)) {}
  RatFunc(Rational c) : num_(std::move(c)), den_(Rational(1)) {}  // NOLINT(google-explicit-constructor)
  RatFunc(int c) : RatFunc(Rational(c)) {}                          // NOLINT(google-explicit-constructor)
  RatFunc(QPoly p) : num_(std::move(p)), den_(Rational(1)) {}      // NOLINT(google-explicit-constructor)

  static RatFunc normalize(QPoly num, QPoly den) {
    if (den.is_zero()) fail(ErrorKind::ZeroDenominator, "rational function with zero denominator");
    RatFunc r;
    if (num.is_zero()) return r;
    auto cf = gcd_cofactors(num, den);
    num = std::move(cf.a_over_g);
    den = std::move(cf.b_over_g);
    Rational lc = den.leading().inverse();
    r.num_ = num.scaled(lc);
    r.den_ = den.scaled(lc);
    return r;
  }

  static RatFunc t() { return RatFunc(QPoly::t()); }
  static RatFunc t_pow(long e) {
    if (e >= 0) return RatFunc(QPoly::monomial(Rational(1), static_cast<std::size_t>(e)));
    return normalize(QPoly(Rational(1)), QPoly::monomial(Rational(1), static_cast<std::size_t>(-e)));
  }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return den_.degree() == 0 && num_ == den_; }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  RatFunc inverse() const {
    if (is_zero()) fail(ErrorKind::DivisionByZero, "inverse of zero rational function");
    return normalize(den_, num_);
  }

  // Sums and products use the reduced-input cancellations (Henrici), so gcds
  // are taken of the smaller cofactors instead of the full products.
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) { return add(a, b.num_, b.den_); }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return add(a, -b.num_, b.den_); }
  friend RatFunc operator-(const RatFunc& a) {
    RatFunc r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    auto c1 = gcd_cofactors(a.num_, b.den_);
    auto c2 = gcd_cofactors(b.num_, a.den_);
    return monic_den(c1.a_over_g * c2.a_over_g, c2.b_over_g * c1.b_over_g);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  // t -> t^{s+1}
  RatFunc endo(long s) const {
    if (s < 1) fail(ErrorKind::InvalidArgument, "endomorphism index must be >= 1");
    const auto k = static_cast<std::size_t>(s + 1);
    return normalize(num_.substitute_power(k), den_.substitute_power(k));
  }

  // d/dt by the quotient rule.
  RatFunc ddt() const {
    if (is_zero()) return {};
    return normalize(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
  }

  std::string str() const {
    const std::string n = num_.str();
    if (den_.degree() == 0) {
      return (num_.coeffs().size() <= 1 || n.find(' ') == std::string::npos) ? n : "(" + n + ")";
    }
    return "(" + n + ")/(" + den_.str() + ")";
  }

  static RatFunc parse(std::string_view text);

  friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.str(); }

 private:
  // num/den already coprime.
  static RatFunc monic_den(QPoly num, QPoly den) {
    RatFunc r;
    if (num.is_zero()) return r;
    const Rational lc = den.leading().inverse();
    r.num_ = lc.is_one() ? std::move(num) : num.scaled(lc);
    r.den_ = lc.is_one() ? std::move(den) : den.scaled(lc);
    return r;
  }

  static RatFunc add(const RatFunc& a, const QPoly& bn, const QPoly& bd) {
    if (bn.is_zero()) return a;
    if (a.is_zero()) return monic_den(bn, bd);
    if (a.den_ == bd) return normalize(a.num_ + bn, bd);
    auto c1 = gcd_cofactors(a.den_, bd);
    if (c1.g.degree() == 0) return monic_den(a.num_ * bd + bn * a.den_, a.den_ * bd);
    // a.den = g*ad, bd = g*bdg with gcd(ad, bdg) = 1, so only g can cancel.
    QPoly num = a.num_ * c1.b_over_g + bn * c1.a_over_g;
    if (num.is_zero()) return {};
    auto c2 = gcd_cofactors(num, c1.g);
    return monic_den(std::move(c2.a_over_g), c1.a_over_g * c1.b_over_g * c2.b_over_g);
  }

  QPoly num_;
  QPoly den_;
};

inline RatFunc ratfunc_normalize(const QPoly& num, const QPoly& den) { return RatFunc::normalize(num, den); }
inline RatFunc ratfunc_endo(long s, const RatFunc& f) { return f.endo(s); }
inline RatFunc ratfunc_ddt(const RatFunc& f) { return f.ddt(); }

namespace detail {

// Recursive descent over the textual forms produced by QPoly/RatFunc::str:
//   rf   := factor ("/" factor)?      factor := "(" poly ")" | poly
//   poly := ["-"] term (("+"|"-") term)*
//   term := rational ["*" "t" ["^" n]] | "t" ["^" n]
class RatFuncParser {
 public:
  explicit RatFuncParser(std::string_view s) : s_(s) {}

  RatFunc parse_all() {
    QPoly num = factor();
    QPoly den(Rational(1));
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      den = factor();
    }
    skip_ws();
    if (pos_ != s_.size()) error("trailing characters");
    return RatFunc::normalize(num, den);
  }

 private:
  QPoly factor() {
    skip_ws();
    if (peek() == '(') {
      ++pos_;
      QPoly p = poly();
      skip_ws();
      if (peek() != ')') error("expected ')'");
      ++pos_;
      return p;
    }
    return poly();
  }

  QPoly poly() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') { neg = true; ++pos_; }
    QPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      // A '/' after a closing paren belongs to the outer rule; '+'/'-' only here.
      ++pos_;
      QPoly t = term();
      acc = c == '+' ? acc + t : acc - t;
    }
    return acc;
  }

  QPoly term() {
    skip_ws();
    Rational coef(1);
    bool have_coef = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = number();
      have_coef = true;
      skip_ws();
      if (peek() != '*') return QPoly(coef);
      ++pos_;
      skip_ws();
    }
    if (peek() != 't') {
      if (have_coef) error("expected 't' after '*'");
      error("expected term");
    }
    ++pos_;
    std::size_t e = 1;
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) error("expected exponent");
      e = std::stoul(std::string(s_.substr(start, pos_ - start)));
    }
    return QPoly::monomial(coef, e);
  }

  Rational number() {
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    // "p/q" only when the slash is directly followed by a digit; otherwise
    // the slash separates numerator and denominator of the function.
    if (peek() == '/' && pos_ + 1 < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_ + 1]))) {
      ++pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }
    return Rational::parse(s_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::ParseError, msg + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RatFunc RatFunc::parse(std::string_view text) { return detail::RatFuncParser(text).parse_all(); }

}  // namespace ffl
