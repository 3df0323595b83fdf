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

// Skew series over Q(t) with the d/dt commutation rule:
// checks t*y = y*t + y^2 and inverts 1 - t*y.

#include <iostream>

#include "ffl/skewpoly.hpp"

int main() {
  const auto ctx = ffl::SkewContext::differential();
  const long d = 6;
  const auto t = ffl::SkewSeries::constant(ctx, d, ffl::RatFunc::t());
  const auto y = ffl::SkewSeries::y_pow(ctx, d, 1);
  std::cout << "t*y = " << (t * y).str() << '\n';

  const auto f = ffl::SkewSeries::one(ctx, d) - t * y;
  const auto g = ffl::series_inv(f);
  std::cout << "(1 - t*y)^-1 = " << g.str() << '\n';
  const bool ok = f * g == ffl::SkewSeries::one(ctx, d) && g * f == ffl::SkewSeries::one(ctx, d);
  std::cout << "two-sided: " << (ok ? "yes" : "no") << '\n';
  return ok ? 0 : 1;
}
