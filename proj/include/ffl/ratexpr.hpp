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
#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ffl/error.hpp"
#include "ffl/freealg.hpp"
#include "ffl/freegroup.hpp"
#include "ffl/lexer.hpp"
#include "ffl/rational.hpp"

namespace ffl {

enum class ExprKind { Variable, Constant, Sum, Product, Inverse };

// Node of an immutable, hash-consed expression DAG. A Variable node with
// `inverted` set is the formal inverse x^-1 of a group-invertible variable:
// a unit of the group algebra, hence an atom of height 0. Inverse nodes
// always add one level of height.
struct ExprNode {
  ExprKind kind;
  std::uint32_t id;
  std::string name;        // Variable
  bool group = false;      // Variable: declared group-invertible
  bool inverted = false;   // Variable: x^-1 letter
  Rational value;          // Constant
  std::vector<const ExprNode*> children;
  std::size_t height = 0;
};

using Expr = const ExprNode*;

// Owns the nodes of one family of expressions and the variable
// declarations they refer to. Nodes live as long as the pool. Structurally
// identical subexpressions are the same node. Construction is synchronized,
// so a pool may be shared by threads that build concurrently.
class ExprPool {
 public:
  ExprPool() = default;
  ExprPool(const ExprPool&) = delete;
  ExprPool& operator=(const ExprPool&) = delete;

  Expr declare(const std::string& name, bool group_invertible = false) {
    std::lock_guard<std::mutex> lock(mu_);
    if (auto it = vars_.find(name); it != vars_.end()) {
      if (it->second->group != group_invertible) {
        fail(ErrorKind::InvalidArgument, "variable '" + name + "' redeclared with a different group flag");
      }
      return it->second;
    }
    ExprNode n{ExprKind::Variable, 0, name, group_invertible, false, Rational(), {}, 0};
    Expr e = intern_locked(std::move(n));
    vars_.emplace(name, e);
    order_.push_back(name);
    return e;
  }

  bool declared(const std::string& name) const {
    std::lock_guard<std::mutex> lock(mu_);
    return vars_.count(name) != 0;
  }

  Expr var(const std::string& name) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = vars_.find(name);
    if (it == vars_.end()) fail(ErrorKind::UnknownVariable, "undeclared variable '" + name + "'");
    return it->second;
  }

  // Declared variable names in declaration order.
  std::vector<std::string> variables() const {
    std::lock_guard<std::mutex> lock(mu_);
    return order_;
  }

  // x^-1 for a group-invertible variable x.
  Expr letter_inverse(Expr v) {
    if (v->kind != ExprKind::Variable || !v->group) {
      fail(ErrorKind::InvalidArgument, "formal inverse letters exist only for group-invertible variables");
    }
    if (v->inverted) return var(v->name);
    ExprNode n{ExprKind::Variable, 0, v->name, true, true, Rational(), {}, 0};
    return intern(std::move(n));
  }

  Expr constant(const Rational& c) {
    ExprNode n{ExprKind::Constant, 0, "", false, false, c, {}, 0};
    return intern(std::move(n));
  }
  Expr zero() { return constant(Rational(0)); }
  Expr one() { return constant(Rational(1)); }

  // n-ary sum; nested sums are flattened, a single summand is returned as is.
  Expr add(const std::vector<Expr>& terms) {
    std::vector<Expr> flat;
    for (Expr t : terms) {
      if (t->kind == ExprKind::Sum) {
        flat.insert(flat.end(), t->children.begin(), t->children.end());
      } else {
        flat.push_back(t);
      }
    }
    if (flat.empty()) return zero();
    if (flat.size() == 1) return flat.front();
    std::size_t h = 0;
    for (Expr t : flat) h = std::max(h, t->height);
    ExprNode n{ExprKind::Sum, 0, "", false, false, Rational(), std::move(flat), h};
    return intern(std::move(n));
  }
  Expr add(Expr a, Expr b) { return add(std::vector<Expr>{a, b}); }

  Expr mul(Expr a, Expr b) {
    ExprNode n{ExprKind::Product, 0, "", false, false, Rational(), {a, b}, std::max(a->height, b->height)};
    return intern(std::move(n));
  }

  // Left-associated product of the factors; the empty product is 1.
  Expr mul(const std::vector<Expr>& factors) {
    if (factors.empty()) return one();
    Expr acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) acc = mul(acc, factors[i]);
    return acc;
  }

  Expr inv(Expr a) {
    ExprNode n{ExprKind::Inverse, 0, "", false, false, Rational(), {a}, a->height + 1};
    return intern(std::move(n));
  }

  // Negation folds into constants; otherwise (-1) * a.
  Expr neg(Expr a) {
    if (a->kind == ExprKind::Constant) return constant(-a->value);
    return mul(constant(Rational(-1)), a);
  }
  Expr sub(Expr a, Expr b) { return add(a, neg(b)); }

  std::size_t size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return nodes_.size();
  }

 private:
  static std::string key_of(const ExprNode& n) {
    std::string k;
    switch (n.kind) {
      case ExprKind::Variable: k = (n.inverted ? "v-" : "v+") + n.name; break;
      case ExprKind::Constant: k = "c" + n.value.str(); break;
      case ExprKind::Sum: k = "s"; break;
      case ExprKind::Product: k = "p"; break;
      case ExprKind::Inverse: k = "i"; break;
    }
    for (Expr c : n.children) k += "," + std::to_string(c->id);
    return k;
  }

  Expr intern(ExprNode n) {
    std::lock_guard<std::mutex> lock(mu_);
    return intern_locked(std::move(n));
  }

  Expr intern_locked(ExprNode n) {
    std::string key = key_of(n);
    if (auto it = table_.find(key); it != table_.end()) return it->second;
    n.id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back(std::move(n));
    Expr e = &nodes_.back();
    table_.emplace(std::move(key), e);
    return e;
  }

  mutable std::mutex mu_;
  std::deque<ExprNode> nodes_;  // deque: stable addresses
  std::unordered_map<std::string, Expr> table_;
  std::map<std::string, Expr> vars_;
  std::vector<std::string> order_;
};

inline std::size_t height(Expr e) { return e->height; }

// Number of distinct nodes reachable from e.
inline std::size_t dag_size(Expr e) {
  std::vector<bool> seen;
  std::vector<Expr> stack{e};
  std::size_t count = 0;
  while (!stack.empty()) {
    Expr n = stack.back();
    stack.pop_back();
    if (n->id >= seen.size()) seen.resize(n->id + 1, false);
    if (seen[n->id]) continue;
    seen[n->id] = true;
    ++count;
    for (Expr c : n->children) stack.push_back(c);
  }
  return count;
}

// ---------------------------------------------------------------------------
// Printing and parsing.
//
//   expr := ["-"] term (("+"|"-") term)*
//   term := factor ("*" factor)*
//   factor := atom ("^" ["-"] NUMBER)?
//   atom := IDENT | NUMBER ["/" NUMBER] | "(" expr ")" | "inv" "(" expr ")"
//
// "^-1" on a group-invertible variable is the height-0 letter x^-1; on any
// other atom it means inv(atom). Positive powers expand to repeated products.

namespace detail {

inline bool is_negation(Expr e) {
  return e->kind == ExprKind::Product && e->children[0]->kind == ExprKind::Constant &&
         e->children[0]->value == Rational(-1) && e->children[1]->kind != ExprKind::Constant;
}

inline void print_expr(Expr e, std::string& out);

inline void print_factor(Expr e, std::string& out) {
  switch (e->kind) {
    case ExprKind::Constant:
      if (e->value.sign() < 0) {
        out += "(" + e->value.str() + ")";
      } else {
        out += e->value.str();
      }
      return;
    case ExprKind::Sum:
      out += "(";
      print_expr(e, out);
      out += ")";
      return;
    case ExprKind::Product:
      if (is_negation(e)) {
        out += "(";
        print_expr(e, out);
        out += ")";
        return;
      }
      print_factor(e->children[0], out);
      out += "*";
      if (e->children[1]->kind == ExprKind::Product) {
        out += "(";
        print_expr(e->children[1], out);
        out += ")";
      } else {
        print_factor(e->children[1], out);
      }
      return;
    case ExprKind::Variable:
      out += e->name;
      if (e->inverted) out += "^-1";
      return;
    case ExprKind::Inverse:
      out += "inv(";
      print_expr(e->children[0], out);
      out += ")";
      return;
  }
}

// A summand: "-t" for negations and negative constants, otherwise a factor chain.
inline void print_summand(Expr e, bool first, std::string& out) {
  if (is_negation(e)) {
    out += first ? "-" : " - ";
    print_factor(e->children[1], out);
    return;
  }
  if (e->kind == ExprKind::Constant && e->value.sign() < 0) {
    out += (first ? "-" : " - ") + (-e->value).str();
    return;
  }
  if (!first) out += " + ";
  print_factor(e, out);
}

inline void print_expr(Expr e, std::string& out) {
  if (e->kind == ExprKind::Sum) {
    for (std::size_t i = 0; i < e->children.size(); ++i) print_summand(e->children[i], i == 0, out);
    return;
  }
  print_summand(e, true, out);
}

class ExprParser {
 public:
  ExprParser(ExprPool& pool, std::string_view text) : pool_(pool), cur_(text) {}

  Expr parse_all() {
    Expr e = expr();
    if (!cur_.at(TokenKind::End)) cur_.error("unexpected token '" + cur_.peek().text + "'");
    return e;
  }

 private:
  Expr expr() {
    std::vector<Expr> terms;
    if (cur_.accept(TokenKind::Minus)) {
      terms.push_back(pool_.neg(term()));
    } else {
      terms.push_back(term());
    }
    for (;;) {
      if (cur_.accept(TokenKind::Plus)) {
        terms.push_back(term());
      } else if (cur_.accept(TokenKind::Minus)) {
        terms.push_back(pool_.neg(term()));
      } else {
        break;
      }
    }
    return pool_.add(terms);
  }

  Expr term() {
    Expr acc = factor();
    while (cur_.accept(TokenKind::Star)) acc = pool_.mul(acc, factor());
    return acc;
  }

  Expr factor() {
    Expr a = atom();
    if (!cur_.accept(TokenKind::Caret)) return a;
    const bool negative = cur_.accept(TokenKind::Minus);
    const long k = std::stol(cur_.expect(TokenKind::Number, "exponent").text);
    if (k == 0) cur_.error("zero exponent");
    Expr base = a;
    if (negative) {
      base = (a->kind == ExprKind::Variable && a->group && !a->inverted) ? pool_.letter_inverse(a) : nullptr;
      if (!base) {
        Expr p = a;
        for (long i = 1; i < k; ++i) p = pool_.mul(p, a);
        return pool_.inv(p);
      }
    }
    Expr p = base;
    for (long i = 1; i < k; ++i) p = pool_.mul(p, base);
    return p;
  }

  Expr atom() {
    const Token& t = cur_.peek();
    if (t.kind == TokenKind::Ident) {
      cur_.next();
      if (t.text == "inv" && cur_.at(TokenKind::LParen)) {
        cur_.next();
        Expr inner = expr();
        cur_.expect(TokenKind::RParen, "')'");
        return pool_.inv(inner);
      }
      if (!pool_.declared(t.text)) fail(ErrorKind::UnknownVariable, "undeclared variable '" + t.text + "'");
      return pool_.var(t.text);
    }
    if (t.kind == TokenKind::Number) {
      mpz_class num(cur_.next().text), den(1);
      if (cur_.at(TokenKind::Slash)) {
        cur_.next();
        den = mpz_class(cur_.expect(TokenKind::Number, "denominator").text);
        if (den == 0) cur_.error("zero denominator");
      }
      return pool_.constant(Rational(num, den));
    }
    if (cur_.accept(TokenKind::LParen)) {
      Expr inner = expr();
      cur_.expect(TokenKind::RParen, "')'");
      return inner;
    }
    cur_.error("expected a variable, number, '(' or inv(");
  }

  ExprPool& pool_;
  TokenCursor cur_;
};

}  // namespace detail

inline std::string print(Expr e) {
  std::string out;
  detail::print_expr(e, out);
  return out;
}

inline Expr parse(ExprPool& pool, std::string_view text) { return detail::ExprParser(pool, text).parse_all(); }

// Rebuilds e with variables replaced; unmapped variables stay. An inverted
// letter x^-1 whose x is mapped becomes inv(image).
inline Expr substitute(ExprPool& pool, Expr e, const std::map<std::string, Expr>& images) {
  std::unordered_map<std::uint32_t, Expr> memo;
  std::function<Expr(Expr)> go = [&](Expr n) -> Expr {
    if (auto it = memo.find(n->id); it != memo.end()) return it->second;
    Expr r = n;
    switch (n->kind) {
      case ExprKind::Variable: {
        auto it = images.find(n->name);
        if (it != images.end()) r = n->inverted ? pool.inv(it->second) : it->second;
        break;
      }
      case ExprKind::Constant: break;
      case ExprKind::Sum: {
        std::vector<Expr> cs;
        for (Expr c : n->children) cs.push_back(go(c));
        r = pool.add(cs);
        break;
      }
      case ExprKind::Product: r = pool.mul(go(n->children[0]), go(n->children[1])); break;
      case ExprKind::Inverse: r = pool.inv(go(n->children[0])); break;
    }
    memo.emplace(n->id, r);
    return r;
  };
  return go(e);
}

// ---------------------------------------------------------------------------
// Conversions to and from the algebra modules.

// Declares the alphabet's letters (non-group) and builds sum c_w * w.
inline Expr from_free_poly(ExprPool& pool, const QFreePoly& p) {
  const Alphabet& alpha = *p.alphabet();
  std::vector<Expr> letters;
  for (const auto& name : alpha.names()) letters.push_back(pool.declare(name, false));
  std::vector<Expr> terms;
  for (const auto& [w, c] : p.terms()) {
    std::vector<Expr> fs;
    for (auto id : w) fs.push_back(letters[id]);
    Expr mono = fs.empty() ? nullptr : pool.mul(fs);
    if (!mono) {
      terms.push_back(pool.constant(c));
    } else if (c == Rational(1)) {
      terms.push_back(mono);
    } else if (c == Rational(-1)) {
      terms.push_back(pool.neg(mono));
    } else {
      terms.push_back(pool.mul(pool.constant(c), mono));
    }
  }
  return pool.add(terms);
}

// Group words over group-invertible variables named by the alphabet.
inline Expr from_group_word(ExprPool& pool, const GroupWord& w, const Alphabet& alpha) {
  std::vector<Expr> fs;
  for (const auto& s : w.syllables()) {
    Expr v = pool.declare(alpha.name(s.gen), true);
    Expr letter = s.exp > 0 ? v : pool.letter_inverse(v);
    for (long k = 0; k < std::labs(s.exp); ++k) fs.push_back(letter);
  }
  return pool.mul(fs);
}

// Expands a polynomial expression (no inversion of any kind) into Q<X>.
inline QFreePoly to_free_poly(Expr e, const AlphabetPtr& alpha) {
  std::unordered_map<std::uint32_t, QFreePoly> memo;
  std::function<QFreePoly(Expr)> go = [&](Expr n) -> QFreePoly {
    if (auto it = memo.find(n->id); it != memo.end()) return it->second;
    QFreePoly r(alpha);
    switch (n->kind) {
      case ExprKind::Variable:
        if (n->inverted) fail(ErrorKind::NotPolynomial, "inverse letter in polynomial expression");
        r = QFreePoly::letter(alpha, n->name);
        break;
      case ExprKind::Constant: r = QFreePoly::constant(alpha, n->value); break;
      case ExprKind::Sum:
        for (Expr c : n->children) r += go(c);
        break;
      case ExprKind::Product: r = go(n->children[0]) * go(n->children[1]); break;
      case ExprKind::Inverse: fail(ErrorKind::NotPolynomial, "inversion in polynomial expression");
    }
    memo.emplace(n->id, r);
    return r;
  };
  return go(e);
}

// Parses the free-polynomial text format (e.g. "2*x*y - y*x^2") over alpha.
inline QFreePoly parse_free_poly(std::string_view text, const AlphabetPtr& alpha) {
  ExprPool pool;
  for (const auto& n : alpha->names()) pool.declare(n, false);
  return to_free_poly(parse(pool, text), alpha);
}

// ---------------------------------------------------------------------------
// Matrices of expressions, quasideterminants and inverses.

class ExprMatrix {
 public:
  ExprMatrix() = default;
  ExprMatrix(std::size_t rows, std::size_t cols, Expr fill) : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Expr& operator()(std::size_t i, std::size_t j) { return e_.at(i * cols_ + j); }
  Expr operator()(std::size_t i, std::size_t j) const { return e_.at(i * cols_ + j); }

  std::size_t max_height() const {
    std::size_t h = 0;
    for (Expr e : e_) h = std::max(h, e->height);
    return h;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Expr> e_;
};

namespace detail {

// Inverse of the submatrix of `a` on the given rows/columns, memoized by
// index sets so shared minors are built once.
class QuasiDetBuilder {
 public:
  QuasiDetBuilder(ExprPool& pool, const ExprMatrix& a) : pool_(pool), a_(a) {}

  // |A_{R,C}|_{ri, cj}: positions are indices into `rows`/`cols`.
  Expr qdet(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols, std::size_t ri,
            std::size_t cj) {
    const Expr entry = a_(rows[ri], cols[cj]);
    if (rows.size() == 1) return entry;
    std::vector<std::size_t> sub_rows, sub_cols;
    for (std::size_t k = 0; k < rows.size(); ++k)
      if (k != ri) sub_rows.push_back(rows[k]);
    for (std::size_t k = 0; k < cols.size(); ++k)
      if (k != cj) sub_cols.push_back(cols[k]);
    const ExprMatrix& minor_inv = inverse(sub_rows, sub_cols);
    // r_i^j (A^{ij})^{-1} s_j^i; minor_inv is indexed (column of minor, row of minor).
    std::vector<Expr> terms;
    for (std::size_t k = 0; k < sub_cols.size(); ++k)
      for (std::size_t l = 0; l < sub_rows.size(); ++l) {
        Expr r = a_(rows[ri], sub_cols[k]);
        Expr s = a_(sub_rows[l], cols[cj]);
        terms.push_back(pool_.mul(pool_.mul(r, minor_inv(k, l)), s));
      }
    return pool_.sub(entry, pool_.add(terms));
  }

  // B with B(j, i) = inv(|A|_{ij}).
  const ExprMatrix& inverse(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
    auto key = std::make_pair(rows, cols);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::size_t n = rows.size();
    ExprMatrix b(n, n, pool_.zero());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(j, i) = pool_.inv(qdet(rows, cols, i, j));
    return memo_.emplace(std::move(key), std::move(b)).first->second;
  }

 private:
  ExprPool& pool_;
  const ExprMatrix& a_;
  std::map<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>, ExprMatrix> memo_;
};

inline std::vector<std::size_t> iota_vec(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = k;
  return v;
}

}  // namespace detail

// (i, j)-th quasideterminant x_ij - r_i^j (A^{ij})^{-1} s_j^i; indices are 0-based.
inline Expr qdet(ExprPool& pool, const ExprMatrix& a, std::size_t i, std::size_t j) {
  if (a.rows() != a.cols() || a.rows() == 0) fail(ErrorKind::DimensionMismatch, "qdet needs a nonempty square matrix");
  if (i >= a.rows() || j >= a.cols()) fail(ErrorKind::IndexOutOfRange, "qdet index out of range");
  detail::QuasiDetBuilder b(pool, a);
  return b.qdet(detail::iota_vec(a.rows()), detail::iota_vec(a.cols()), i, j);
}

// B with B(j, i) = inv(qdet(A, i, j)).
inline ExprMatrix matrix_inverse_expr(ExprPool& pool, const ExprMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0) fail(ErrorKind::DimensionMismatch, "inverse needs a nonempty square matrix");
  detail::QuasiDetBuilder b(pool, a);
  return b.inverse(detail::iota_vec(a.rows()), detail::iota_vec(a.cols()));
}

// ---------------------------------------------------------------------------
// Witness families.

enum class FamilyKind { Generic, CohnW, ConjZ, GroupComm, LieBracket };

inline std::string_view to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::Generic: return "generic";
    case FamilyKind::CohnW: return "cohn_w";
    case FamilyKind::ConjZ: return "conj_z";
    case FamilyKind::GroupComm: return "group_comm";
    case FamilyKind::LieBracket: return "lie_bracket";
  }
  return "?";
}

inline FamilyKind family_from_string(std::string_view s) {
  for (auto k : {FamilyKind::Generic, FamilyKind::CohnW, FamilyKind::ConjZ, FamilyKind::GroupComm,
                 FamilyKind::LieBracket}) {
    if (to_string(k) == s) return k;
  }
  fail(ErrorKind::UnsupportedKind, "unknown family '" + std::string(s) + "'");
}

inline std::string generic_entry_name(std::size_t i, std::size_t j, std::size_t m) {
  if (m <= 9) return "x" + std::to_string(i + 1) + std::to_string(j + 1);
  return "x" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
}

// m x m witness matrix. Index layout (0-based i = row, j = column):
//   generic     fresh variable x_{ij}
//   cohn_w      w_{jm+i},  w_0 = y1, w_k = [x, w_{k-1}]     over {x, y1}
//   conj_z      z_{jm+i} = x^{jm+i} y1 x^{-(jm+i)}          group vars x, y1
//   group_comm  (x^{i+1}, y^{j+1})                          group vars x, y
//   lie_bracket [[x,y]_{i+1}, x]_{j+1}                      over {x, y}
inline ExprMatrix build_family(ExprPool& pool, FamilyKind kind, std::size_t m) {
  if (m == 0) fail(ErrorKind::InvalidArgument, "family size must be >= 1");
  ExprMatrix a(m, m, pool.zero());
  switch (kind) {
    case FamilyKind::Generic:
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) a(i, j) = pool.declare(generic_entry_name(i, j, m), false);
      break;
    case FamilyKind::CohnW: {
      auto alpha = Alphabet::make({"x", "y1"});
      const auto x = QFreePoly::letter(alpha, "x");
      std::vector<QFreePoly> w{QFreePoly::letter(alpha, "y1")};
      while (w.size() < m * m) w.push_back(bracket(x, w.back()));
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) a(i, j) = from_free_poly(pool, w[j * m + i]);
      break;
    }
    case FamilyKind::ConjZ: {
      const Alphabet alpha({"x", "y1"});
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
          a(i, j) = from_group_word(pool, conj_generator(static_cast<long>(j * m + i)), alpha);
      break;
    }
    case FamilyKind::GroupComm: {
      const Alphabet alpha({"x", "y"});
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
          const auto w = commutator_word(GroupWord::gen(0, static_cast<long>(i + 1)),
                                         GroupWord::gen(1, static_cast<long>(j + 1)));
          a(i, j) = from_group_word(pool, w, alpha);
        }
      break;
    }
    case FamilyKind::LieBracket: {
      auto alpha = Alphabet::make({"x", "y"});
      const auto x = QFreePoly::letter(alpha, "x");
      const auto y = QFreePoly::letter(alpha, "y");
      for (std::size_t i = 0; i < m; ++i) {
        const auto inner = iterated_bracket_right(x, y, i + 1);
        for (std::size_t j = 0; j < m; ++j) a(i, j) = from_free_poly(pool, iterated_bracket_right(inner, x, j + 1));
      }
      break;
    }
  }
  return a;
}

}  // namespace ffl
