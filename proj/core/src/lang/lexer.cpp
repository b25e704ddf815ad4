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

#include "lexer.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

#include "wengert/lang/parser.hpp"

namespace wengert::lang::detail {
namespace {

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::string_view describe(Tok kind) {
  switch (kind) {
    case Tok::Number: return "number";
    case Tok::Ident: return "identifier";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Colon: return "':'";
    case Tok::Assign: return "'='";
    case Tok::Lt: return "'<'";
    case Tok::Le: return "'<='";
    case Tok::Gt: return "'>'";
    case Tok::Ge: return "'>='";
    case Tok::EqEq: return "'=='";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::size_t begin, std::size_t end) {
    tokens.push_back({kind, {begin, end}, src.substr(begin, end - begin), 0.0});
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    const std::size_t begin = i;
    if (is_digit(c)) {
      while (i < src.size() && is_digit(src[i])) ++i;
      if (i < src.size() && src[i] == '.') {
        ++i;
        while (i < src.size() && is_digit(src[i])) ++i;
      }
      if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
        if (j < src.size() && is_digit(src[j])) {
          while (j < src.size() && is_digit(src[j])) ++j;
          i = j;
        } else {
          throw ParseError(ParseErrorKind::Lexical, {begin, j},
                           "malformed exponent in number literal");
        }
      }
      double value = 0.0;
      const auto [ptr, ec] =
          std::from_chars(src.data() + begin, src.data() + i, value);
      if (ec != std::errc() || ptr != src.data() + i || !std::isfinite(value)) {
        throw ParseError(ParseErrorKind::Lexical, {begin, i},
                         "number literal out of range");
      }
      push(Tok::Number, begin, i);
      tokens.back().number = value;
      continue;
    }
    if (is_ident_start(c)) {
      while (i < src.size() && is_ident_char(src[i])) ++i;
      push(Tok::Ident, begin, i);
      continue;
    }
    const char next = i + 1 < src.size() ? src[i + 1] : '\0';
    Tok kind;
    std::size_t len = 1;
    switch (c) {
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case ':': kind = Tok::Colon; break;
      case '<':
        kind = next == '=' ? Tok::Le : Tok::Lt;
        len = next == '=' ? 2 : 1;
        break;
      case '>':
        kind = next == '=' ? Tok::Ge : Tok::Gt;
        len = next == '=' ? 2 : 1;
        break;
      case '=':
        kind = next == '=' ? Tok::EqEq : Tok::Assign;
        len = next == '=' ? 2 : 1;
        break;
      default: {
        std::string shown;
        const auto uc = static_cast<unsigned char>(c);
        if (std::isprint(uc) != 0) {
          shown = std::string("'") + c + "'";
        } else {
          static constexpr char kHex[] = "0123456789abcdef";
          shown = std::string("byte 0x") + kHex[uc >> 4] + kHex[uc & 0xf];
        }
        throw ParseError(ParseErrorKind::Lexical, {begin, begin + 1},
                         "unexpected character " + shown);
      }
    }
    i += len;
    push(kind, begin, i);
  }
  push(Tok::End, src.size(), src.size());
  return tokens;
}

}  // namespace wengert::lang::detail
