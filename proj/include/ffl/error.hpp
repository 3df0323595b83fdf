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

#include <stdexcept>
#include <string>
#include <string_view>

namespace ffl {

enum class ErrorKind {
  ZeroDenominator,
  DivisionByZero,
  ModulusMismatch,
  NotPrime,
  ParseError,
  AlphabetMismatch,
  MissingImage,
  ZeroElement,
  ContextMismatch,
  InvalidContext,
  TruncationMismatch,
  ZeroSeries,
  RequiresAutomorphism,
  IndexOutOfRange,
  SyntaxError,
  UnknownVariable,
  UnsupportedKind,
  NotPolynomial,
  SingularInversion,
  DimensionMismatch,
  InvalidArgument,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ModulusMismatch: return "ModulusMismatch";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::MissingImage: return "MissingImage";
    case ErrorKind::ZeroElement: return "ZeroElement";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::InvalidContext: return "InvalidContext";
    case ErrorKind::TruncationMismatch: return "TruncationMismatch";
    case ErrorKind::ZeroSeries: return "ZeroSeries";
    case ErrorKind::RequiresAutomorphism: return "RequiresAutomorphism";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::UnsupportedKind: return "UnsupportedKind";
    case ErrorKind::NotPolynomial: return "NotPolynomial";
    case ErrorKind::SingularInversion: return "SingularInversion";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// All library failures are reported through this one exception type; the
// kind is what callers and tests dispatch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace ffl
