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

// Partial Malcev-Neumann inverse of 2 - x + y^-1 x in Q[F(x, y)].

#include <iostream>

#include "ffl/freegroup.hpp"

int main() {
  const auto alpha = ffl::Alphabet::make({"x", "y"});
  const ffl::MagnusOrderContext order(alpha);
  const auto f = ffl::parse_group_alg("2 - x + y^-1 x", *alpha);
  const auto [c, r] = ffl::mn_partial_inverse(order, f, 3);
  std::cout << "f = " << f.str(*alpha) << '\n';
  std::cout << "c = " << c.str(*alpha) << '\n';
  std::cout << "r = " << r.str(*alpha) << '\n';
  const bool ok = f * c == ffl::GroupAlgElt::one() - r;
  std::cout << "f*c = 1 - r: " << (ok ? "yes" : "no") << '\n';
  return ok ? 0 : 1;
}
