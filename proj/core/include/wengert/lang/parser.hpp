// Copyright 2026 The Wengert Authors.
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

#include "wengert/lang/ast.hpp"

namespace wengert::lang {

enum class ParseErrorKind {
  Lexical,
  Syntax,
  UseBeforeAssignment,
  NonConstantLoopBound,
  AssignToParameter,
  TooDeep,
};

class ParseError : public std::runtime_error {
 public:
  ParseError(ParseErrorKind kind, SourceSpan span, const std::string& message);

  ParseErrorKind kind() const noexcept { return kind_; }
  SourceSpan span() const noexcept { return span_; }
  const std::string& message() const noexcept { return message_; }

 private:
  ParseErrorKind kind_;
  SourceSpan span_;
  std::string message_;
};

// Parses either a full program
//
//   params x1, x2
//   y = ...
//   return e1, e2
//
// or a bare comma-separated expression list whose parameters are inferred
// in first-use order. Every failure is a ParseError carrying a span.
ProgramAst parse(std::string_view source);

// Nesting limit for expressions and blocks.
inline constexpr std::size_t kMaxNestingDepth = 256;
// Upper bound on a single repeat count.
inline constexpr std::uint64_t kMaxRepeatCount = 1'000'000;

}  // namespace wengert::lang
