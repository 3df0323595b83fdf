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
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ffl/error.hpp"
#include "ffl/field.hpp"
#include "ffl/linalg.hpp"
#include "ffl/ratexpr.hpp"
#include "ffl/rng.hpp"

namespace ffl {

// Variable name -> N x N matrix, with optional derivation companions.
// Inverse letters x^-1 are evaluated from the matrix of x.
template <class Field>
struct MatrixAssignment {
  using T = typename Field::value_type;
  using Mat = Matrix<T>;

  Field field;
  std::size_t size = 1;
  std::uint64_t seed = 0;
  std::map<std::string, Mat> values;
  std::map<std::string, Mat> companions;

  bool has_companions() const { return !companions.empty(); }
};

namespace detail {

[[noreturn]] inline void singular(std::uint32_t node) {
  fail(ErrorKind::SingularInversion, "singular inversion at node " + std::to_string(node));
}

template <class Field>
Matrix<typename Field::value_type> random_matrix(const Field& f, std::size_t n, Rng& rng) {
  Matrix<typename Field::value_type> m(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.random(rng);
  return m;
}

template <class Field>
bool is_invertible(const Field& f, const Matrix<typename Field::value_type>& m) {
  return !determinant(f, m).is_zero();
}

inline bool is_invertible(const RationalField&, const Matrix<Rational>& m) {
  return !bareiss_determinant(m).is_zero();
}

}  // namespace detail

inline constexpr int kMaxInvertibleRejections = 64;

// Rejection-samples an invertible matrix from rng.
template <class Field>
Matrix<typename Field::value_type> rand_invertible(std::size_t n, const Field& f, Rng& rng) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "matrix size must be >= 1");
  for (int k = 0; k < kMaxInvertibleRejections; ++k) {
    auto m = detail::random_matrix(f, n, rng);
    if (detail::is_invertible(f, m)) return m;
  }
  fail(ErrorKind::InvalidArgument, "no invertible matrix after 64 draws; RNG misconfigured?");
}

template <class Field>
Matrix<typename Field::value_type> rand_invertible(std::size_t n, const Field& f, std::uint64_t seed) {
  Rng rng(seed);
  return rand_invertible(n, f, rng);
}

// Draws every variable declared in the pool, in declaration order, from
// Rng(seed): invertible matrices for group variables, uniform ones otherwise.
// With companions, each variable also receives a uniform derivation matrix.
template <class Field>
MatrixAssignment<Field> random_assignment(const ExprPool& pool, const Field& f, std::size_t n, std::uint64_t seed,
                                          bool with_companions = false) {
  MatrixAssignment<Field> a{f, n, seed, {}, {}};
  Rng rng(seed);
  for (const auto& name : pool.variables()) {
    Expr v = pool.var(name);
    a.values.emplace(name, v->group ? rand_invertible(n, f, rng) : detail::random_matrix(f, n, rng));
    if (with_companions) a.companions.emplace(name, detail::random_matrix(f, n, rng));
  }
  return a;
}

// Memoized evaluator for one assignment. Not thread-safe; use one per thread.
template <class Field>
class Evaluator {
 public:
  using T = typename Field::value_type;
  using Mat = Matrix<T>;
  using Pair = std::pair<Mat, Mat>;

  explicit Evaluator(const MatrixAssignment<Field>& a) : a_(a) {}

  const Mat& eval(Expr e) {
    if (auto it = memo_.find(e->id); it != memo_.end()) return it->second;
    Mat r;
    switch (e->kind) {
      case ExprKind::Variable: {
        const Mat& m = lookup(a_.values, e->name);
        if (e->inverted) {
          auto inv = try_inverse(a_.field, m);
          if (!inv) detail::singular(e->id);
          r = std::move(*inv);
        } else {
          r = m;
        }
        break;
      }
      case ExprKind::Constant: r = Mat::scalar(a_.field, a_.size, a_.field.from_rational(e->value)); break;
      case ExprKind::Sum:
        r = eval(e->children[0]);
        for (std::size_t k = 1; k < e->children.size(); ++k) r += eval(e->children[k]);
        break;
      case ExprKind::Product: r = eval(e->children[0]) * eval(e->children[1]); break;
      case ExprKind::Inverse: {
        auto inv = try_inverse(a_.field, eval(e->children[0]));
        if (!inv) detail::singular(e->id);
        r = std::move(*inv);
        break;
      }
    }
    return memo_.emplace(e->id, std::move(r)).first->second;
  }

  // (value, derivative) under the derivation determined by the companions.
  const Pair& eval_d(Expr e) {
    if (auto it = dmemo_.find(e->id); it != dmemo_.end()) return it->second;
    Pair r;
    switch (e->kind) {
      case ExprKind::Variable: {
        const Mat& m = lookup(a_.values, e->name);
        const Mat& d = lookup(a_.companions, e->name);
        if (e->inverted) {
          auto inv = try_inverse(a_.field, m);
          if (!inv) detail::singular(e->id);
          r = {*inv, -((*inv) * d * (*inv))};
        } else {
          r = {m, d};
        }
        break;
      }
      case ExprKind::Constant:
        r = {Mat::scalar(a_.field, a_.size, a_.field.from_rational(e->value)), Mat::zero(a_.field, a_.size, a_.size)};
        break;
      case ExprKind::Sum:
        r = eval_d(e->children[0]);
        for (std::size_t k = 1; k < e->children.size(); ++k) {
          const Pair& c = eval_d(e->children[k]);
          r.first += c.first;
          r.second += c.second;
        }
        break;
      case ExprKind::Product: {
        const Pair& l = eval_d(e->children[0]);
        const Pair& q = eval_d(e->children[1]);
        r = {l.first * q.first, l.first * q.second + l.second * q.first};
        break;
      }
      case ExprKind::Inverse: {
        const Pair& c = eval_d(e->children[0]);
        auto inv = try_inverse(a_.field, c.first);
        if (!inv) detail::singular(e->id);
        r = {*inv, -((*inv) * c.second * (*inv))};
        break;
      }
    }
    return dmemo_.emplace(e->id, std::move(r)).first->second;
  }

 private:
  static const Mat& lookup(const std::map<std::string, Mat>& m, const std::string& name) {
    auto it = m.find(name);
    if (it == m.end()) fail(ErrorKind::UnknownVariable, "no matrix assigned to '" + name + "'");
    return it->second;
  }

  const MatrixAssignment<Field>& a_;
  std::unordered_map<std::uint32_t, Mat> memo_;
  std::unordered_map<std::uint32_t, Pair> dmemo_;
};

template <class Field>
Matrix<typename Field::value_type> eval(Expr e, const MatrixAssignment<Field>& a) {
  return Evaluator<Field>(a).eval(e);
}

template <class Field>
std::pair<Matrix<typename Field::value_type>, Matrix<typename Field::value_type>> eval_with_derivation(
    Expr e, const MatrixAssignment<Field>& a) {
  if (!a.has_companions()) fail(ErrorKind::InvalidArgument, "eval_with_derivation needs derivation companions");
  return Evaluator<Field>(a).eval_d(e);
}

// The 2N x 2N assignment x -> (M_x, D_x; 0, M_x).
template <class Field>
MatrixAssignment<Field> block_assignment(const MatrixAssignment<Field>& a) {
  using Mat = Matrix<typename Field::value_type>;
  MatrixAssignment<Field> b{a.field, 2 * a.size, a.seed, {}, {}};
  for (const auto& [name, m] : a.values) {
    auto it = a.companions.find(name);
    if (it == a.companions.end()) fail(ErrorKind::UnknownVariable, "no companion for '" + name + "'");
    Mat big = Mat::zero(a.field, 2 * a.size, 2 * a.size);
    big.set_block(0, 0, m);
    big.set_block(0, a.size, it->second);
    big.set_block(a.size, a.size, m);
    b.values.emplace(name, std::move(big));
  }
  return b;
}

// nN x nN block matrix whose (i, j) block is eval(A(i, j)).
template <class Field>
Matrix<typename Field::value_type> eval_matrix(const ExprMatrix& m, Evaluator<Field>& ev, const Field& f,
                                               std::size_t n) {
  Matrix<typename Field::value_type> out = Matrix<typename Field::value_type>::zero(f, m.rows() * n, m.cols() * n);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set_block(i * n, j * n, ev.eval(m(i, j)));
  return out;
}

template <class Field>
Matrix<typename Field::value_type> eval_matrix(const ExprMatrix& m, const MatrixAssignment<Field>& a) {
  Evaluator<Field> ev(a);
  return eval_matrix(m, ev, a.field, a.size);
}

// ---------------------------------------------------------------------------
// Randomized identity testing.

enum class Outcome { EqualProbably, Distinct, Undefined };

inline std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::EqualProbably: return "EQUAL_PROBABLY";
    case Outcome::Distinct: return "DISTINCT";
    case Outcome::Undefined: return "UNDEFINED";
  }
  return "?";
}

// Everything needed to reproduce a distinguishing trial: random_assignment
// with this seed and size, then compare entry (row, col).
struct Witness {
  std::uint64_t seed = 0;
  std::size_t size = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  std::string lhs;
  std::string rhs;
};

struct Verdict {
  Outcome outcome = Outcome::Undefined;
  std::optional<Witness> witness;
  std::size_t trials = 0;
  std::size_t singular_trials = 0;
  double failure_bound = 0;  // heuristic per-trial false-equality bound
  double elapsed_ms = 0;

  friend bool operator==(const Verdict& a, const Verdict& b) {
    auto wkey = [](const std::optional<Witness>& w) {
      return w ? std::make_tuple(true, w->seed, w->size, w->row, w->col, w->lhs, w->rhs)
               : std::make_tuple(false, std::uint64_t{0}, std::size_t{0}, std::size_t{0}, std::size_t{0},
                                 std::string(), std::string());
    };
    return a.outcome == b.outcome && wkey(a.witness) == wkey(b.witness) && a.trials == b.trials &&
           a.singular_trials == b.singular_trials && a.failure_bound == b.failure_bound;
  }
};

struct IdentityTestOptions {
  std::vector<std::size_t> sizes{2, 3, 4};
  std::size_t trials = 5;
  std::uint64_t seed = 0;
  std::size_t resample_budget = 8;
  std::size_t threads = 0;  // 0: FFL_THREADS or hardware concurrency
};

// Syntactic degree: variables 1, products add, sums take the max, an
// inverse counts as its argument. Only feeds the heuristic bound.
inline std::size_t syntactic_degree(Expr e) {
  std::unordered_map<std::uint32_t, std::size_t> memo;
  std::function<std::size_t(Expr)> go = [&](Expr n) -> std::size_t {
    if (auto it = memo.find(n->id); it != memo.end()) return it->second;
    std::size_t d = 0;
    switch (n->kind) {
      case ExprKind::Variable: d = 1; break;
      case ExprKind::Constant: d = 0; break;
      case ExprKind::Sum:
        for (Expr c : n->children) d = std::max(d, go(c));
        break;
      case ExprKind::Product: d = go(n->children[0]) + go(n->children[1]); break;
      case ExprKind::Inverse: d = go(n->children[0]); break;
    }
    memo.emplace(n->id, d);
    return d;
  };
  return go(e);
}

inline std::size_t thread_budget(std::size_t requested) {
  if (requested) return requested;
  if (const char* env = std::getenv("FFL_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Runs job(k) for k in [0, count) on up to `threads` workers.
template <class Job>
void parallel_for(std::size_t count, std::size_t threads, Job&& job) {
  threads = std::min(threads, count);
  if (threads <= 1) {
    for (std::size_t k = 0; k < count; ++k) job(k);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> workers;
  std::vector<std::exception_ptr> errors(threads);
  for (std::size_t w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      try {
        for (std::size_t k = next++; k < count; k = next++) job(k);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

namespace detail {

struct TrialResult {
  bool defined = false;
  std::optional<Witness> witness;
};

template <class Field>
TrialResult run_trial(const ExprPool& pool, Expr e1, Expr e2, const Field& f, std::size_t n, std::uint64_t seed,
                      std::size_t t, std::size_t budget) {
  TrialResult res;
  for (std::size_t k = 0; k < std::max<std::size_t>(budget, 1); ++k) {
    const std::uint64_t s = derive_seed(derive_seed(seed, n, t), k);
    auto a = random_assignment(pool, f, n, s);
    Evaluator<Field> ev(a);
    try {
      const auto& l = ev.eval(e1);
      const auto& r = ev.eval(e2);
      res.defined = true;
      for (std::size_t i = 0; i < n && !res.witness; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (!(l(i, j) == r(i, j))) {
            res.witness = Witness{s, n, i, j, l(i, j).str(), r(i, j).str()};
            break;
          }
      return res;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::SingularInversion) throw;
    }
  }
  return res;
}

inline double sample_space(const PrimeField& f) { return static_cast<double>(f.p); }
inline double sample_space(const RationalField& f) { return static_cast<double>(2 * f.sample_bound + 1); }

}  // namespace detail

// Trial t at size N draws from stream derive(seed, N, t); resample k of that
// trial from derive(derive(seed, N, t), k). Results are merged in (size,
// trial) order, so the verdict does not depend on the thread count.
template <class Field>
Verdict identity_test(const ExprPool& pool, Expr e1, Expr e2, const Field& f, const IdentityTestOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t n : opt.sizes) {
    if (n == 0) fail(ErrorKind::InvalidArgument, "matrix sizes must be >= 1");
    for (std::size_t t = 0; t < opt.trials; ++t) jobs.emplace_back(n, t);
  }
  std::vector<detail::TrialResult> results(jobs.size());
  parallel_for(jobs.size(), thread_budget(opt.threads), [&](std::size_t k) {
    results[k] = detail::run_trial(pool, e1, e2, f, jobs[k].first, opt.seed, jobs[k].second, opt.resample_budget);
  });

  Verdict v;
  v.trials = jobs.size();
  bool any_defined = false;
  for (const auto& r : results) {
    if (!r.defined) {
      ++v.singular_trials;
      continue;
    }
    any_defined = true;
    if (r.witness && !v.witness) v.witness = r.witness;
  }
  v.outcome = v.witness ? Outcome::Distinct : any_defined ? Outcome::EqualProbably : Outcome::Undefined;
  std::size_t max_n = 1;
  for (std::size_t n : opt.sizes) max_n = std::max(max_n, n);
  v.failure_bound = static_cast<double>(std::max(syntactic_degree(e1), syntactic_degree(e2)) * max_n) /
                    detail::sample_space(f);
  v.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return v;
}

}  // namespace ffl
