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
#include <vector>

#include "ffl/freealg.hpp"
#include "ffl/field.hpp"
#include "ffl/linalg.hpp"

namespace ffl {

inline AlphabetPtr letters_alphabet(std::size_t num_letters) {
  std::vector<std::string> names;
  if (num_letters <= 3) {
    const char* base[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < num_letters; ++i) names.emplace_back(base[i]);
  } else {
    for (std::size_t i = 1; i <= num_letters; ++i) names.push_back("a" + std::to_string(i));
  }
  return Alphabet::make(std::move(names));
}

struct LyndonElement {
  FreeWord word;
  std::size_t degree = 0;
  QFreePoly bracketing;  // expansion of the standard bracketing
};

// Duval's algorithm: all Lyndon words of length <= max_len over k letters, in
// lexicographic order.
inline std::vector<FreeWord> duval_lyndon_words(std::uint32_t k, std::size_t max_len) {
  std::vector<FreeWord> out;
  if (k == 0 || max_len == 0) return out;
  FreeWord w{0};
  while (!w.empty()) {
    out.push_back(w);
    const std::size_t m = w.size();
    while (w.size() < max_len) w.push_back(w[w.size() - m]);
    while (!w.empty() && w.back() == k - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

namespace detail {

// w is Lyndon iff it is strictly smaller than each of its proper suffixes.
inline bool is_lyndon_by_suffix(const FreeWord& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!(w < FreeWord(w.begin() + static_cast<std::ptrdiff_t>(i), w.end()))) return false;
  return !w.empty();
}

}  // namespace detail

// Standard bracketing: split w = uv with v the longest proper Lyndon suffix
// and bracket the two halves recursively.
inline QFreePoly standard_bracketing(const FreeWord& w, const AlphabetPtr& alpha,
                                     std::map<FreeWord, QFreePoly>& memo) {
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  QFreePoly result(alpha);
  if (w.size() == 1) {
    result = QFreePoly::word(alpha, w);
  } else {
    std::size_t split = 1;
    for (; split < w.size(); ++split) {
      if (detail::is_lyndon_by_suffix(FreeWord(w.begin() + static_cast<std::ptrdiff_t>(split), w.end()))) break;
    }
    FreeWord u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(split));
    FreeWord v(w.begin() + static_cast<std::ptrdiff_t>(split), w.end());
    result = bracket(standard_bracketing(u, alpha, memo), standard_bracketing(v, alpha, memo));
  }
  memo.emplace(w, result);
  return result;
}

// Lyndon words of length <= max_degree in deglex order, each with its
// expanded standard bracketing.
inline std::vector<LyndonElement> lyndon_words(std::size_t num_letters, std::size_t max_degree,
                                               const AlphabetPtr& alpha) {
  if (num_letters == 0 || max_degree == 0) fail(ErrorKind::InvalidArgument, "lyndon_words needs positive sizes");
  auto words = duval_lyndon_words(static_cast<std::uint32_t>(num_letters), max_degree);
  std::sort(words.begin(), words.end(), DegLex{});
  std::map<FreeWord, QFreePoly> memo;
  std::vector<LyndonElement> out;
  out.reserve(words.size());
  for (auto& w : words) {
    LyndonElement e;
    e.degree = w.size();
    e.bracketing = standard_bracketing(w, alpha, memo);
    e.word = std::move(w);
    out.push_back(std::move(e));
  }
  return out;
}

inline std::vector<LyndonElement> lyndon_words(std::size_t num_letters, std::size_t max_degree) {
  return lyndon_words(num_letters, max_degree, letters_alphabet(num_letters));
}

struct PbwReport {
  std::size_t num_letters = 0;
  std::size_t max_degree = 0;
  std::size_t standard_monomials = 0;
  std::size_t word_monomials = 0;
  std::size_t rank = 0;
  std::vector<std::size_t> monomials_per_degree;  // index = degree
  std::vector<std::size_t> words_per_degree;
  bool independent() const { return rank == standard_monomials; }
};

// Expands every standard monomial (nondecreasing products of Lyndon
// bracketings, in deglex order of the Lyndon words) of total degree
// <= max_degree and computes the exact rank of their coefficient matrix
// against the word basis.
inline PbwReport pbw_independence_check(std::size_t num_letters, std::size_t max_degree) {
  auto alpha = letters_alphabet(num_letters);
  const auto lyndon = lyndon_words(num_letters, max_degree, alpha);

  std::vector<QFreePoly> monomials;
  std::vector<std::size_t> degrees;
  // Depth-first over nondecreasing index sequences.
  struct Frame {
    std::size_t min_index;
    std::size_t degree;
    QFreePoly value;
  };
  std::vector<Frame> stack{{0, 0, QFreePoly::constant(alpha, Rational(1))}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    monomials.push_back(f.value);
    degrees.push_back(f.degree);
    for (std::size_t k = f.min_index; k < lyndon.size(); ++k) {
      if (f.degree + lyndon[k].degree > max_degree) continue;
      stack.push_back({k, f.degree + lyndon[k].degree, f.value * lyndon[k].bracketing});
    }
  }

  PbwReport rep;
  rep.num_letters = num_letters;
  rep.max_degree = max_degree;
  rep.standard_monomials = monomials.size();
  rep.monomials_per_degree.assign(max_degree + 1, 0);
  for (auto d : degrees) ++rep.monomials_per_degree[d];

  // Column index for every word of length <= max_degree.
  std::map<FreeWord, std::size_t, DegLex> column;
  rep.words_per_degree.assign(max_degree + 1, 0);
  {
    std::vector<FreeWord> layer{FreeWord{}};
    for (std::size_t d = 0; d <= max_degree; ++d) {
      for (const auto& w : layer) column.emplace(w, column.size());
      rep.words_per_degree[d] = layer.size();
      if (d == max_degree) break;
      std::vector<FreeWord> next;
      for (const auto& w : layer)
        for (std::uint32_t a = 0; a < num_letters; ++a) {
          FreeWord v = w;
          v.push_back(a);
          next.push_back(std::move(v));
        }
      layer = std::move(next);
    }
  }
  rep.word_monomials = column.size();

  Matrix<Rational> m(monomials.size(), column.size(), Rational(0));
  for (std::size_t i = 0; i < monomials.size(); ++i)
    for (const auto& [w, c] : monomials[i].terms()) m(i, column.at(w)) = c;
  rep.rank = bareiss_rank(m);
  return rep;
}

}  // namespace ffl
