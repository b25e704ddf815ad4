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

#include <string>
#include <string_view>
#include <vector>

#include "wengert/lang/ast.hpp"

namespace wengert::lang::detail {

enum class Tok {
  Number,
  Ident,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
  Comma,
  Colon,
  Assign,
  Lt,
  Le,
  Gt,
  Ge,
  EqEq,
  End,
};

struct Token {
  Tok kind;
  SourceSpan span;
  std::string_view text;
  double number = 0.0;
};

std::string_view describe(Tok kind);

// Whitespace and '#' line comments are skipped. Throws ParseError(Lexical).
std::vector<Token> lex(std::string_view source);

}  // namespace wengert::lang::detail
