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
#include <initializer_list>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ffl/error.hpp"
#include "ffl/rational.hpp"

namespace ffl {

// Ordered set of generator names. Letter ids are positions in this list and
// the list order is the letter order used by deglex.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {}

  static std::shared_ptr<const Alphabet> make(std::vector<std::string> names) {
    return std::make_shared<const Alphabet>(std::move(names));
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::uint32_t id) const { return names_.at(id); }
  const std::vector<std::string>& names() const { return names_; }

  std::uint32_t id(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) fail(ErrorKind::UnknownVariable, "letter '" + name + "' not in alphabet");
    return static_cast<std::uint32_t>(it - names_.begin());
  }
  bool contains(const std::string& name) const {
    return std::find(names_.begin(), names_.end(), name) != names_.end();
  }

  friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

inline bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  return a == b || (a && b && *a == *b);
}

using FreeWord = std::vector<std::uint32_t>;

// Degree first, then lexicographic in letter order.
struct DegLex {
  bool operator()(const FreeWord& a, const FreeWord& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

inline FreeWord concat(const FreeWord& a, const FreeWord& b) {
  FreeWord w;
  w.reserve(a.size() + b.size());
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

// "x*y1^2*x"; the empty word prints as "1".
inline std::string word_str(const FreeWord& w, const Alphabet& alpha) {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    if (!out.empty()) out += "*";
    out += alpha.name(w[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

// Element of the free associative algebra K<X>. Terms are kept in a deglex
// ordered map and zero coefficients are never stored, so the representation
// is canonical and operator== is equality in the algebra.
template <class K = Rational>
class FreePoly {
 public:
  using Coeff = K;
  using Terms = std::map<FreeWord, K, DegLex>;

  FreePoly() = default;
  explicit FreePoly(AlphabetPtr alpha) : alpha_(std::move(alpha)) {}

  static FreePoly constant(AlphabetPtr alpha, const K& c) {
    FreePoly p(std::move(alpha));
    p.add_term({}, c);
    return p;
  }
  static FreePoly word(AlphabetPtr alpha, FreeWord w, const K& c = K(1)) {
    FreePoly p(std::move(alpha));
    p.add_term(std::move(w), c);
    return p;
  }
  static FreePoly letter(AlphabetPtr alpha, const std::string& name) {
    const auto id = alpha->id(name);
    return word(std::move(alpha), FreeWord{id});
  }

  const AlphabetPtr& alphabet() const { return alpha_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  K coeff(const FreeWord& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? K(0) : it->second;
  }

  // Largest total degree present; -1 for zero.
  long degree() const { return terms_.empty() ? -1 : static_cast<long>(terms_.rbegin()->first.size()); }

  void add_term(FreeWord w, const K& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(w), c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  FreePoly& operator+=(const FreePoly& o) {
    adopt(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
  }
  FreePoly& operator-=(const FreePoly& o) {
    adopt(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
  }
  friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
  friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }
  friend FreePoly operator-(const FreePoly& a) {
    FreePoly r(a.alpha_);
    for (const auto& [w, c] : a.terms_) r.terms_.emplace(w, -c);
    return r;
  }

  friend FreePoly operator*(const FreePoly& a, const FreePoly& b) {
    FreePoly r(a.alpha_ ? a.alpha_ : b.alpha_);
    r.adopt(b);
    r.adopt(a);
    for (const auto& [u, cu] : a.terms_)
      for (const auto& [v, cv] : b.terms_) r.add_term(concat(u, v), cu * cv);
    return r;
  }
  FreePoly& operator*=(const FreePoly& o) { return *this = *this * o; }

  FreePoly scaled(const K& s) const {
    FreePoly r(alpha_);
    if (s.is_zero()) return r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, c * s);
    return r;
  }

  // Drop every term of degree > d.
  FreePoly truncated(std::size_t d) const {
    FreePoly r(alpha_);
    for (const auto& [w, c] : terms_)
      if (w.size() <= d) r.terms_.emplace(w, c);
    return r;
  }

  // Homogeneous component of degree d.
  FreePoly component(std::size_t d) const {
    FreePoly r(alpha_);
    for (const auto& [w, c] : terms_)
      if (w.size() == d) r.terms_.emplace(w, c);
    return r;
  }

  friend bool operator==(const FreePoly& a, const FreePoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const FreePoly& a, const FreePoly& b) { return !(a == b); }

  // "2*x*y - y*x^2"; zero prints as "0".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
      const bool neg = c.sign() < 0;
      const K mag = neg ? -c : c;
      out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      if (w.empty()) {
        out += mag.str();
      } else if (mag.is_one()) {
        out += word_str(w, *alpha_);
      } else {
        out += mag.str() + "*" + word_str(w, *alpha_);
      }
    }
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const FreePoly& p) { return os << p.str(); }

 private:
  void adopt(const FreePoly& o) {
    if (!alpha_) {
      alpha_ = o.alpha_;
    } else if (o.alpha_ && !same_alphabet(alpha_, o.alpha_)) {
      fail(ErrorKind::AlphabetMismatch, "free polynomials over different alphabets");
    }
  }

  AlphabetPtr alpha_;
  Terms terms_;
};

using QFreePoly = FreePoly<Rational>;

template <class K>
FreePoly<K> fa_mul(const FreePoly<K>& p, const FreePoly<K>& q) {
  return p * q;
}

template <class K>
FreePoly<K> bracket(const FreePoly<K>& p, const FreePoly<K>& q) {
  return p * q - q * p;
}

// w_0 = y, w_i = [x, w_{i-1}].
template <class K>
FreePoly<K> iterated_bracket_left(const FreePoly<K>& x, const FreePoly<K>& y, std::size_t i) {
  FreePoly<K> w = y;
  for (std::size_t k = 0; k < i; ++k) w = bracket(x, w);
  return w;
}

// w_i over the alphabet {x, y1}.
inline QFreePoly iterated_bracket_left(std::size_t i) {
  auto alpha = Alphabet::make({"x", "y1"});
  return iterated_bracket_left(QFreePoly::letter(alpha, "x"), QFreePoly::letter(alpha, "y1"), i);
}

// [p,q]_1 = [p,q], [p,q]_n = [[p,q]_{n-1}, q].
template <class K>
FreePoly<K> iterated_bracket_right(const FreePoly<K>& p, const FreePoly<K>& q, std::size_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "iterated_bracket_right needs n >= 1");
  FreePoly<K> r = bracket(p, q);
  for (std::size_t k = 1; k < n; ++k) r = bracket(r, q);
  return r;
}

inline AlphabetPtr cohn_alphabet(std::size_t n) {
  std::vector<std::string> names{"x"};
  for (std::size_t k = 1; k <= n; ++k) names.push_back("y" + std::to_string(k));
  return Alphabet::make(std::move(names));
}

// Image of z_i in k<x, y1..yn>: with i = r*n + j, 0 <= j < n, this is the
// r-fold left bracket by x applied to y_{j+1}. Consequently
// [x, cohn_embed(i)] = cohn_embed(i + n).
inline QFreePoly cohn_embed(std::size_t i, std::size_t n, const AlphabetPtr& alpha) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "cohn_embed needs n >= 1");
  const std::size_t r = i / n;
  const std::size_t j = i % n;
  return iterated_bracket_left(QFreePoly::letter(alpha, "x"), QFreePoly::letter(alpha, "y" + std::to_string(j + 1)),
                               r);
}

inline QFreePoly cohn_embed(std::size_t i, std::size_t n) { return cohn_embed(i, n, cohn_alphabet(n)); }

// Extends a map on generators to the unique derivation with d(uv) = d(u)v + u d(v).
template <class K>
FreePoly<K> derivation_apply(const std::map<std::uint32_t, FreePoly<K>>& images, const FreePoly<K>& p) {
  const AlphabetPtr& alpha = p.alphabet();
  FreePoly<K> out(alpha);
  for (const auto& [w, c] : p.terms()) {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      auto it = images.find(w[pos]);
      if (it == images.end()) {
        fail(ErrorKind::MissingImage, "no derivation image for letter '" + (alpha ? alpha->name(w[pos]) : std::to_string(w[pos])) + "'");
      }
      FreeWord left(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
      FreeWord right(w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.end());
      out += FreePoly<K>::word(alpha, std::move(left), c) * it->second * FreePoly<K>::word(alpha, std::move(right));
    }
  }
  return out;
}

// Name-keyed convenience overload; every letter of the alphabet must have an image.
template <class K>
FreePoly<K> derivation_apply(const std::map<std::string, FreePoly<K>>& images, const FreePoly<K>& p) {
  std::map<std::uint32_t, FreePoly<K>> by_id;
  if (p.alphabet()) {
    for (std::uint32_t id = 0; id < p.alphabet()->size(); ++id) {
      auto it = images.find(p.alphabet()->name(id));
      if (it == images.end()) fail(ErrorKind::MissingImage, "no derivation image for '" + p.alphabet()->name(id) + "'");
      by_id.emplace(id, it->second);
    }
  }
  return derivation_apply(by_id, p);
}

}  // namespace ffl
