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

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ffl/error.hpp"

namespace ffl {

enum class TokenKind { Ident, Number, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  TokenKind kind;
  std::string text;
  std::size_t pos;
};

// Shared tokenizer for expression text and group-word text.
// IDENT := [a-zA-Z][a-zA-Z0-9_]*, NUMBER := [0-9]+ (fractions are assembled
// by the parsers from NUMBER "/" NUMBER).
inline std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({TokenKind::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({TokenKind::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    TokenKind k;
    switch (c) {
      case '+': k = TokenKind::Plus; break;
      case '-': k = TokenKind::Minus; break;
      case '*': k = TokenKind::Star; break;
      case '/': k = TokenKind::Slash; break;
      case '^': k = TokenKind::Caret; break;
      case '(': k = TokenKind::LParen; break;
      case ')': k = TokenKind::RParen; break;
      case ',': k = TokenKind::Comma; break;
      default:
        fail(ErrorKind::SyntaxError, "unexpected character '" + std::string(1, c) + "' at position " +
                                         std::to_string(i));
    }
    out.push_back({k, std::string(1, c), start});
    ++i;
  }
  out.push_back({TokenKind::End, "", s.size()});
  return out;
}

// Cursor over a token vector with the small helpers every parser here needs.
class TokenCursor {
 public:
  explicit TokenCursor(std::string_view text) : text_(text), toks_(tokenize(text)) {}

  const Token& peek(std::size_t ahead = 0) const {
    const std::size_t k = i_ + ahead;
    return k < toks_.size() ? toks_[k] : toks_.back();
  }
  bool at(TokenKind k) const { return peek().kind == k; }
  const Token& next() {
    const Token& t = toks_[i_];
    if (i_ + 1 < toks_.size()) ++i_;
    return t;
  }
  bool accept(TokenKind k) {
    if (!at(k)) return false;
    next();
    return true;
  }
  const Token& expect(TokenKind k, const char* what) {
    if (!at(k)) error(std::string("expected ") + what);
    return next();
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::SyntaxError, msg + " at position " + std::to_string(peek().pos) + " in '" + std::string(text_) + "'");
  }

 private:
  std::string_view text_;
  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

}  // namespace ffl
