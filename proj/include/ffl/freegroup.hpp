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
#include <cstdlib>
#include <map>
#include <mutex>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ffl/error.hpp"
#include "ffl/freealg.hpp"
#include "ffl/lexer.hpp"
#include "ffl/rational.hpp"

namespace ffl {

struct Syllable {
  std::uint32_t gen;
  long exp;
  friend bool operator==(const Syllable& a, const Syllable& b) { return a.gen == b.gen && a.exp == b.exp; }
  friend bool operator<(const Syllable& a, const Syllable& b) {
    return a.gen != b.gen ? a.gen < b.gen : a.exp < b.exp;
  }
};

// Reduced word in a free group: adjacent syllables have distinct generators
// and no exponent is zero. The empty word is the identity.
class GroupWord {
 public:
  GroupWord() = default;

  // Freely reduces an arbitrary syllable sequence (zero exponents allowed).
  static GroupWord reduce(const std::vector<Syllable>& seq) {
    GroupWord w;
    for (const auto& s : seq) w.push_back(s);
    return w;
  }

  static GroupWord gen(std::uint32_t g, long e = 1) { return reduce({{g, e}}); }

  const std::vector<Syllable>& syllables() const { return syl_; }
  bool is_identity() const { return syl_.empty(); }

  // Total number of letters, sum of |exponent|.
  std::size_t length() const {
    std::size_t n = 0;
    for (const auto& s : syl_) n += static_cast<std::size_t>(std::labs(s.exp));
    return n;
  }

  GroupWord inverse() const {
    GroupWord w;
    w.syl_.reserve(syl_.size());
    for (auto it = syl_.rbegin(); it != syl_.rend(); ++it) w.syl_.push_back({it->gen, -it->exp});
    return w;
  }

  friend GroupWord operator*(GroupWord a, const GroupWord& b) {
    for (const auto& s : b.syl_) a.push_back(s);
    return a;
  }

  friend bool operator==(const GroupWord& a, const GroupWord& b) { return a.syl_ == b.syl_; }
  friend bool operator!=(const GroupWord& a, const GroupWord& b) { return !(a == b); }
  friend bool operator<(const GroupWord& a, const GroupWord& b) { return a.syl_ < b.syl_; }

  // "x^2 y x^-2"; identity prints as "1".
  std::string str(const Alphabet& alpha) const {
    if (syl_.empty()) return "1";
    std::string out;
    for (const auto& s : syl_) {
      if (!out.empty()) out += " ";
      out += alpha.name(s.gen);
      if (s.exp != 1) out += "^" + std::to_string(s.exp);
    }
    return out;
  }

 private:
  void push_back(const Syllable& s) {
    if (s.exp == 0) return;
    if (!syl_.empty() && syl_.back().gen == s.gen) {
      syl_.back().exp += s.exp;
      if (syl_.back().exp == 0) syl_.pop_back();
    } else {
      syl_.push_back(s);
    }
  }

  std::vector<Syllable> syl_;
};

inline GroupWord gw_mul(const GroupWord& u, const GroupWord& v) { return u * v; }
inline GroupWord gw_inv(const GroupWord& u) { return u.inverse(); }

// Reduction of a raw letter sequence (generator, +-1) scanning right to left;
// the group product above scans left to right. Used to check confluence.
inline GroupWord reduce_right_to_left(const std::vector<Syllable>& seq) {
  std::vector<Syllable> stack;
  for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
    if (it->exp == 0) continue;
    if (!stack.empty() && stack.back().gen == it->gen) {
      stack.back().exp += it->exp;
      if (stack.back().exp == 0) stack.pop_back();
    } else {
      stack.push_back(*it);
    }
  }
  std::reverse(stack.begin(), stack.end());
  return GroupWord::reduce(stack);
}

// Finite Q-linear combination of group words: an element of Q[H].
class GroupAlgElt {
 public:
  using Terms = std::map<GroupWord, Rational>;

  GroupAlgElt() = default;
  GroupAlgElt(const GroupWord& w, const Rational& c) { add_term(w, c); }  // NOLINT(google-explicit-constructor)
  static GroupAlgElt one() { return GroupAlgElt(GroupWord(), Rational(1)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const GroupWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const GroupWord& w, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  GroupAlgElt& operator+=(const GroupAlgElt& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  GroupAlgElt& operator-=(const GroupAlgElt& o) {
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend GroupAlgElt operator+(GroupAlgElt a, const GroupAlgElt& b) { return a += b; }
  friend GroupAlgElt operator-(GroupAlgElt a, const GroupAlgElt& b) { return a -= b; }
  friend GroupAlgElt operator*(const GroupAlgElt& a, const GroupAlgElt& b) {
    GroupAlgElt r;
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [v, cv] : b.terms_) r.add_term(u * v, cu * cv);
    return r;
  }
  GroupAlgElt scaled(const Rational& s) const {
    GroupAlgElt r;
    for (const auto& [w, c] : terms_) r.add_term(w, c * s);
    return r;
  }

  friend bool operator==(const GroupAlgElt& a, const GroupAlgElt& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const GroupAlgElt& a, const GroupAlgElt& b) { return !(a == b); }

  std::string str(const Alphabet& alpha) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      const bool neg = c.sign() < 0;
      const Rational mag = neg ? -c : c;
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      if (w.is_identity()) {
        out += mag.str();
      } else {
        if (!mag.is_one()) out += mag.str() + "*";
        out += w.str(alpha);
      }
    }
    return out;
  }

 private:
  Terms terms_;
};

// Truncated Magnus expansion x -> 1 + X, x^-1 -> 1 - X + X^2 - ..., as an
// element of Q<X> over the same alphabet; terms of degree > `degree` dropped.
inline QFreePoly magnus_expand(const GroupWord& w, std::size_t degree, const AlphabetPtr& alpha) {
  if (degree == 0) fail(ErrorKind::InvalidArgument, "magnus_expand needs degree >= 1");
  QFreePoly acc = QFreePoly::constant(alpha, Rational(1));
  for (const auto& s : w.syllables()) {
    // (1+X)^e as a polynomial in X truncated at `degree`; generalized
    // binomial coefficients C(e, j) cover negative e.
    QFreePoly factor(alpha);
    Rational binom(1);
    FreeWord xs;
    for (std::size_t j = 0; j <= degree; ++j) {
      if (binom.is_zero()) break;
      factor.add_term(xs, binom);
      binom = binom * Rational::from_int(s.exp - static_cast<long>(j)) / Rational::from_int(static_cast<long>(j) + 1);
      xs.push_back(s.gen);
    }
    acc = (acc * factor).truncated(degree);
  }
  return acc;
}

enum class Ordering { Less, Equal, Greater };

inline std::string_view to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "LESS";
    case Ordering::Equal: return "EQUAL";
    case Ordering::Greater: return "GREATER";
  }
  return "?";
}

namespace detail {

// Sign of the deglex-first nonzero non-constant coefficient of the Magnus
// expansion of w truncated at `degree`, or 0 if all vanish. Dense layers per
// degree; coefficients in __int128 (word lengths here keep them far below
// the overflow limit, which is nevertheless checked).
inline int magnus_leading_sign(const GroupWord& w, std::size_t num_gens, std::size_t degree) {
  using I = __int128;
  std::vector<std::vector<I>> layer(degree + 1);
  std::size_t width = 1;
  for (std::size_t d = 0; d <= degree; ++d) {
    if (width > (std::size_t{1} << 26)) fail(ErrorKind::InvalidArgument, "Magnus comparison degree too large");
    layer[d].assign(width, 0);
    width *= num_gens;
  }
  layer[0][0] = 1;
  auto checked_add = [](I& acc, I v) {
    if (__builtin_add_overflow(acc, v, &acc)) fail(ErrorKind::InvalidArgument, "Magnus coefficient overflow");
  };
  auto checked_mul = [](I a, I b) {
    I r;
    if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::InvalidArgument, "Magnus coefficient overflow");
    return r;
  };
  for (const auto& s : w.syllables()) {
    // Coefficients of (1+X)^e up to X^degree; integral for every integer e.
    std::vector<I> binom(degree + 1, 0);
    binom[0] = 1;
    for (std::size_t j = 1; j <= degree; ++j) {
      binom[j] = checked_mul(binom[j - 1], static_cast<I>(s.exp - static_cast<long>(j) + 1)) / static_cast<I>(j);
      if (binom[j] == 0) break;
    }
    std::vector<std::vector<I>> out(degree + 1);
    for (std::size_t d = 0; d <= degree; ++d) out[d].assign(layer[d].size(), 0);
    for (std::size_t d = 0; d <= degree; ++d) {
      for (std::size_t idx = 0; idx < layer[d].size(); ++idx) {
        const I c = layer[d][idx];
        if (c == 0) continue;
        std::size_t target = idx;
        for (std::size_t j = 0; d + j <= degree; ++j) {
          if (j > 0) target = target * num_gens + s.gen;
          if (binom[j] == 0) break;
          checked_add(out[d + j][target], checked_mul(c, binom[j]));
        }
      }
    }
    layer = std::move(out);
  }
  for (std::size_t d = 1; d <= degree; ++d)
    for (const I c : layer[d])
      if (c != 0) return c > 0 ? 1 : -1;
  return 0;
}

}  // namespace detail

// Bi-invariant total order on a free group induced by the Magnus embedding:
// g > 1 iff the deglex-first nonzero non-constant Magnus coefficient of g is
// positive, and g < h iff h^-1 g < 1. Verdicts are cached per word h^-1 g;
// the cache is guarded so one context may be shared across threads.
class MagnusOrderContext {
 public:
  explicit MagnusOrderContext(AlphabetPtr alpha) : alpha_(std::move(alpha)) {}

  const AlphabetPtr& alphabet() const { return alpha_; }

  // +1, 0 or -1 according to w > 1, w = 1, w < 1.
  int sign(const GroupWord& w) const {
    if (w.is_identity()) return 0;
    {
      std::lock_guard<std::mutex> lock(mu_);
      if (auto it = cache_.find(w); it != cache_.end()) return it->second;
    }
    const std::size_t cap = w.length();
    int s = 0;
    for (std::size_t d = std::min<std::size_t>(2, cap);; d = std::min(2 * d, cap)) {
      s = detail::magnus_leading_sign(w, alpha_->size(), d);
      if (s != 0 || d == cap) break;
    }
    // The Magnus map is injective and a reduced word of length L has a
    // nonzero coefficient in degree <= L, so s == 0 here is a bug.
    if (s == 0) fail(ErrorKind::InvalidArgument, "Magnus expansion vanished for a nontrivial word");
    std::lock_guard<std::mutex> lock(mu_);
    cache_.emplace(w, s);
    return s;
  }

  Ordering compare(const GroupWord& g, const GroupWord& h) const {
    if (g == h) return Ordering::Equal;
    return sign(h.inverse() * g) > 0 ? Ordering::Greater : Ordering::Less;
  }

  std::size_t cache_size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return cache_.size();
  }

 private:
  AlphabetPtr alpha_;
  mutable std::mutex mu_;
  mutable std::map<GroupWord, int> cache_;
};

inline Ordering magnus_compare(const MagnusOrderContext& ctx, const GroupWord& g, const GroupWord& h) {
  return ctx.compare(g, h);
}

// Coefficient and word at the minimal element of supp f.
inline std::pair<Rational, GroupWord> least_term(const MagnusOrderContext& ctx, const GroupAlgElt& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroElement, "least_term of zero");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it)
    if (ctx.compare(it->first, best->first) == Ordering::Less) best = it;
  return {best->second, best->first};
}

struct PartialInverse {
  GroupAlgElt c;  // truncated inverse series
  GroupAlgElt r;  // remainder: f * c = 1 - r
};

// With u = a0*w0 the least term of f and h = (u - f) u^-1, returns
// c = u^-1 (1 + h + ... + h^M) and r = h^(M+1). Then f c = 1 - r exactly,
// and every word in supp r is > 1 since supp h is.
inline PartialInverse mn_partial_inverse(const MagnusOrderContext& ctx, const GroupAlgElt& f, std::size_t max_power) {
  const auto [a0, w0] = least_term(ctx, f);
  const GroupAlgElt u_inv(w0.inverse(), a0.inverse());
  const GroupAlgElt h = (GroupAlgElt(w0, a0) - f) * u_inv;
  GroupAlgElt sum = GroupAlgElt::one();
  GroupAlgElt power = GroupAlgElt::one();
  for (std::size_t m = 1; m <= max_power; ++m) {
    power = power * h;
    sum += power;
  }
  return {u_inv * sum, power * h};
}

// z_i = x^i y1 x^-i over generators (x, y1) given by id.
inline GroupWord conj_generator(long i, std::uint32_t x = 0, std::uint32_t y1 = 1) {
  return GroupWord::reduce({{x, i}, {y1, 1}, {x, -i}});
}

// (a, b) = a^-1 b^-1 a b
inline GroupWord commutator_word(const GroupWord& a, const GroupWord& b) {
  return a.inverse() * b.inverse() * a * b;
}

// f -> x f x^-1, term by term.
inline GroupAlgElt conj_shift(const GroupAlgElt& f, std::uint32_t x = 0) {
  const GroupWord gx = GroupWord::gen(x);
  const GroupWord gx_inv = gx.inverse();
  GroupAlgElt out;
  for (const auto& [w, c] : f.terms()) out.add_term(gx * w * gx_inv, c);
  return out;
}

namespace detail {

// word := (IDENT ["^" ["-"] NUMBER] ["*"])+
inline GroupWord parse_group_word_tokens(TokenCursor& cur, const Alphabet& alpha) {
  std::vector<Syllable> seq;
  while (cur.at(TokenKind::Ident)) {
    const Token& id = cur.next();
    if (!alpha.contains(id.text)) fail(ErrorKind::UnknownVariable, "unknown generator '" + id.text + "'");
    long e = 1;
    if (cur.accept(TokenKind::Caret)) {
      const bool neg = cur.accept(TokenKind::Minus);
      e = std::stol(cur.expect(TokenKind::Number, "exponent").text);
      if (neg) e = -e;
    }
    seq.push_back({alpha.id(id.text), e});
    if (cur.at(TokenKind::Star) && cur.peek(1).kind == TokenKind::Ident) cur.next();
  }
  return GroupWord::reduce(seq);
}

}  // namespace detail

// Parses "x^2 y x^-2" (juxtaposition or '*' between letters; "1" is the identity).
inline GroupWord parse_group_word(std::string_view text, const Alphabet& alpha) {
  TokenCursor cur(text);
  GroupWord w;
  if (cur.at(TokenKind::Number) && cur.peek().text == "1") {
    cur.next();
  } else {
    if (!cur.at(TokenKind::Ident)) cur.error("expected generator");
    w = detail::parse_group_word_tokens(cur, alpha);
  }
  if (!cur.at(TokenKind::End)) cur.error("trailing input");
  return w;
}

// Parses a linear combination such as "1 - x", "2*x^2 y - 3/2 x^-1".
inline GroupAlgElt parse_group_alg(std::string_view text, const Alphabet& alpha) {
  TokenCursor cur(text);
  GroupAlgElt out;
  bool first = true;
  while (!cur.at(TokenKind::End)) {
    Rational sign(1);
    if (cur.accept(TokenKind::Minus)) {
      sign = Rational(-1);
    } else if (!first) {
      cur.expect(TokenKind::Plus, "'+' or '-'");
    }
    first = false;
    Rational coef(1);
    bool have_coef = false;
    if (cur.at(TokenKind::Number)) {
      mpz_class num(cur.next().text), den(1);
      if (cur.accept(TokenKind::Slash)) den = mpz_class(cur.expect(TokenKind::Number, "denominator").text);
      coef = Rational(num, den);
      have_coef = true;
      cur.accept(TokenKind::Star);
    }
    GroupWord w;
    if (cur.at(TokenKind::Ident)) {
      w = detail::parse_group_word_tokens(cur, alpha);
    } else if (!have_coef) {
      cur.error("expected term");
    }
    out.add_term(w, sign * coef);
  }
  return out;
}

}  // namespace ffl
