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


// Shared helpers for the unit tests: hand-rolled random generators and an
// error-kind assertion.

#pragma once

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "ffl/error.hpp"
#include "ffl/freealg.hpp"
#include "ffl/rng.hpp"

namespace ffl::testing {

template <class F>
void expect_kind(ErrorKind kind, F&& f) {
  try {
    f();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

inline FreeWord random_word(Rng& rng, std::size_t letters, std::size_t max_len) {
  FreeWord w(static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_len))));
  for (auto& l : w) l = static_cast<std::uint32_t>(rng.below(letters));
  return w;
}

// Sparse polynomial with at most max_terms terms and small integer coefficients.
inline QFreePoly random_free_poly(Rng& rng, const AlphabetPtr& alpha, std::size_t max_terms = 4,
                                  std::size_t max_len = 3) {
  QFreePoly p(alpha);
  const auto terms = rng.uniform(0, static_cast<std::int64_t>(max_terms));
  for (std::int64_t i = 0; i < terms; ++i) {
    std::int64_t c = rng.uniform(-3, 3);
    if (c == 0) c = 1;
    p += QFreePoly::word(alpha, random_word(rng, alpha->size(), max_len), Rational::from_int(c));
  }
  return p;
}

}  // namespace ffl::testing
