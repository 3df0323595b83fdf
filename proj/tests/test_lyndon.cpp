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

#include "ffl/lyndon.hpp"
#include "ffl/ratexpr.hpp"
#include "support.hpp"

namespace ffl {
namespace {

// Brute force: w is Lyndon iff it is strictly smaller than every proper rotation.
bool lyndon_by_rotation(const FreeWord& w) {
  for (std::size_t k = 1; k < w.size(); ++k) {
    FreeWord rot(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    rot.insert(rot.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    if (!(w < rot)) return false;
  }
  return !w.empty();
}

std::vector<FreeWord> brute_force_lyndon(std::uint32_t letters, std::size_t max_len) {
  std::vector<FreeWord> out;
  std::vector<FreeWord> layer{FreeWord{}};
  for (std::size_t d = 1; d <= max_len; ++d) {
    std::vector<FreeWord> next;
    for (const auto& w : layer)
      for (std::uint32_t a = 0; a < letters; ++a) {
        FreeWord v = w;
        v.push_back(a);
        if (lyndon_by_rotation(v)) out.push_back(v);
        next.push_back(std::move(v));
      }
    layer = std::move(next);
  }
  std::sort(out.begin(), out.end(), DegLex{});
  return out;
}

std::vector<FreeWord> words_of(const std::vector<LyndonElement>& ls) {
  std::vector<FreeWord> out;
  for (const auto& l : ls) out.push_back(l.word);
  return out;
}

TEST(Lyndon, Examples) {
  auto two = lyndon_words(2, 2);
  ASSERT_EQ(two.size(), 3u);
  EXPECT_EQ(words_of(two), (std::vector<FreeWord>{{0}, {1}, {0, 1}}));
  auto ab = letters_alphabet(2);
  EXPECT_EQ(two[2].bracketing, parse_free_poly("x*y - y*x", ab));

  auto three = lyndon_words(2, 3);
  std::vector<FreeWord> deg3;
  for (const auto& l : three)
    if (l.degree == 3) deg3.push_back(l.word);
  EXPECT_EQ(deg3, (std::vector<FreeWord>{{0, 0, 1}, {0, 1, 1}}));

  EXPECT_EQ(words_of(lyndon_words(1, 4)), (std::vector<FreeWord>{{0}}));
}

TEST(Lyndon, MatchesBruteForce) {
  for (std::uint32_t k = 1; k <= 3; ++k) {
    for (std::size_t d = 1; d <= (k == 3 ? 5u : 7u); ++d) {
      EXPECT_EQ(words_of(lyndon_words(k, d)), brute_force_lyndon(k, d)) << "k=" << k << " d=" << d;
    }
  }
}

TEST(Lyndon, CountsOverTwoLetters) {
  auto ls = lyndon_words(2, 6);
  std::vector<std::size_t> counts(7, 0);
  for (const auto& l : ls) ++counts[l.degree];
  EXPECT_EQ(std::vector<std::size_t>(counts.begin() + 1, counts.end()), (std::vector<std::size_t>{2, 1, 2, 3, 6, 9}));
  // The enumeration oracle agrees.
  std::vector<std::size_t> brute(7, 0);
  for (const auto& w : brute_force_lyndon(2, 6)) ++brute[w.size()];
  EXPECT_EQ(counts, brute);
}

TEST(Lyndon, Triangularity) {
  for (std::size_t k : {2u, 3u}) {
    for (const auto& l : lyndon_words(k, k == 2 ? 6 : 5)) {
      ASSERT_FALSE(l.bracketing.is_zero());
      const auto& [first_word, first_coeff] = *l.bracketing.terms().begin();
      EXPECT_EQ(first_word, l.word);
      EXPECT_TRUE(first_coeff.is_one());
      for (const auto& [w, c] : l.bracketing.terms()) EXPECT_EQ(w.size(), l.degree);
    }
  }
}

TEST(Pbw, Examples) {
  auto r22 = pbw_independence_check(2, 2);
  EXPECT_EQ(r22.standard_monomials, 7u);
  EXPECT_EQ(r22.rank, 7u);
  EXPECT_TRUE(r22.independent());
  EXPECT_EQ(r22.monomials_per_degree, (std::vector<std::size_t>{1, 2, 4}));

  auto r13 = pbw_independence_check(1, 3);
  EXPECT_EQ(r13.standard_monomials, 4u);
  EXPECT_EQ(r13.rank, 4u);

  auto r24 = pbw_independence_check(2, 4);
  EXPECT_EQ(r24.rank, 31u);
  EXPECT_EQ(r24.standard_monomials, 31u);
  EXPECT_EQ(r24.word_monomials, 31u);
  EXPECT_EQ(r24.monomials_per_degree, r24.words_per_degree);
}

TEST(Pbw, ThreeLetters) {
  auto r = pbw_independence_check(3, 3);
  EXPECT_TRUE(r.independent());
  EXPECT_EQ(r.rank, 1u + 3 + 9 + 27);
}

}  // namespace
}  // namespace ffl
