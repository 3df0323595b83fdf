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

// Builds the inverse of a 3x3 generic matrix from quasideterminants, prints
// one entry and checks A*B = I on random 4x4 matrices over F_p.

#include <iostream>

#include "ffl/matval.hpp"
#include "ffl/ratexpr.hpp"

int main() {
  ffl::ExprPool pool;
  const auto a = ffl::build_family(pool, ffl::FamilyKind::Generic, 3);
  const auto b = ffl::matrix_inverse_expr(pool, a);
  std::cout << "B(0,0) = " << ffl::print(b(0, 0)) << '\n';
  std::cout << "height " << b(0, 0)->height << ", " << pool.size() << " DAG nodes\n";

  const ffl::PrimeField fp;
  const auto asg = ffl::random_assignment(pool, fp, 4, /*seed=*/1);
  const auto prod = ffl::eval_matrix(a, asg) * ffl::eval_matrix(b, asg);
  const bool ok = prod == ffl::Matrix<ffl::PrimeFieldElt>::identity(fp, 12);
  std::cout << "A*B = I at N=4: " << (ok ? "yes" : "no") << '\n';
  return ok ? 0 : 1;
}
