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

#include "wengert/lang/parser.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iterator>
#include <optional>
#include <set>
#include <type_traits>
#include <variant>

#include "lexer.hpp"

namespace wengert::lang {
namespace {

using detail::Tok;
using detail::Token;

constexpr std::array<std::string_view, 6> kKeywords = {
    "params", "return", "if", "else", "end", "repeat"};

std::optional<ElemOp> function_op(std::string_view name) {
  if (name == "ln") return ElemOp::Ln;
  if (name == "exp") return ElemOp::Exp;
  if (name == "sin") return ElemOp::Sin;
  if (name == "cos") return ElemOp::Cos;
  if (name == "tan") return ElemOp::Tan;
  if (name == "sqrt") return ElemOp::Sqrt;
  return std::nullopt;
}

bool is_keyword(std::string_view s) {
  return std::find(kKeywords.begin(), kKeywords.end(), s) != kKeywords.end();
}

bool is_reserved(std::string_view s) {
  return is_keyword(s) || function_op(s).has_value();
}

ExprPtr make_expr(decltype(Expr::node) node, SourceSpan span) {
  auto e = std::make_unique<Expr>();
  e->node = std::move(node);
  e->span = span;
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view source)
      : source_(source), tokens_(detail::lex(source)) {}

  ProgramAst parse_source() {
    if (at_keyword("params")) return parse_program();
    return parse_bare();
  }

 private:
  // --- token helpers ---
  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& advance() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool at(Tok kind) const { return peek().kind == kind; }
  bool at_keyword(std::string_view kw) const {
    return peek().kind == Tok::Ident && peek().text == kw;
  }

  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw ParseError(ParseErrorKind::Syntax, t.span,
                     what + ", found " + found(t));
  }
  static std::string found(const Token& t) {
    if (t.kind == Tok::End) return "end of input";
    return "'" + std::string(t.text) + "'";
  }

  const Token& expect(Tok kind, std::string_view context) {
    if (!at(kind)) {
      fail(peek(), "expected " + std::string(detail::describe(kind)) + " " +
                       std::string(context));
    }
    return advance();
  }
  void expect_keyword(std::string_view kw) {
    if (!at_keyword(kw)) fail(peek(), "expected '" + std::string(kw) + "'");
    advance();
  }

  struct DepthGuard {
    DepthGuard(Parser& p, const Token& t) : parser(p) {
      if (++parser.depth_ > kMaxNestingDepth) {
        throw ParseError(ParseErrorKind::TooDeep, t.span,
                         "nesting deeper than " +
                             std::to_string(kMaxNestingDepth) + " levels");
      }
    }
    ~DepthGuard() { --parser.depth_; }
    DepthGuard(const DepthGuard&) = delete;
    DepthGuard& operator=(const DepthGuard&) = delete;
    Parser& parser;
  };

  // --- programs ---
  ProgramAst parse_bare() {
    ProgramAst program;
    program.bare = true;
    bare_ = true;
    program.returns.push_back(parse_expr());
    while (at(Tok::Comma)) {
      advance();
      program.returns.push_back(parse_expr());
    }
    if (!at(Tok::End)) fail(peek(), "expected operator or end of input");
    program.params = std::move(inferred_);
    return program;
  }

  ProgramAst parse_program() {
    ProgramAst program;
    expect_keyword("params");
    do {
      if (!program.params.empty()) advance();  // ','
      const Token& name = expect(Tok::Ident, "in parameter list");
      if (is_reserved(name.text)) {
        fail(name, "expected parameter name");
      }
      if (std::find(program.params.begin(), program.params.end(), name.text) !=
          program.params.end()) {
        throw ParseError(ParseErrorKind::Syntax, name.span,
                         "duplicate parameter '" + std::string(name.text) + "'");
      }
      program.params.emplace_back(name.text);
    } while (at(Tok::Comma));

    program.body = parse_block({"return"});
    expect_keyword("return");
    program.returns.push_back(parse_expr());
    while (at(Tok::Comma)) {
      advance();
      program.returns.push_back(parse_expr());
    }
    if (!at(Tok::End)) fail(peek(), "expected end of input after return");
    return program;
  }

  Block parse_block(std::initializer_list<std::string_view> terminators) {
    Block block;
    for (;;) {
      for (std::string_view t : terminators) {
        if (at_keyword(t)) return block;
      }
      if (at(Tok::End)) {
        std::string want;
        for (std::string_view t : terminators) {
          if (!want.empty()) want += " or ";
          want += "'" + std::string(t) + "'";
        }
        fail(peek(), "expected statement or " + want);
      }
      block.push_back(parse_stmt());
    }
  }

  Stmt parse_stmt() {
    const Token& first = peek();
    DepthGuard guard(*this, first);
    const std::size_t begin = first.span.begin;
    if (at_keyword("if")) {
      advance();
      IfStmt s;
      s.cond = parse_cmp();
      expect(Tok::Colon, "after if condition");
      s.then_block = parse_block({"else", "end"});
      if (at_keyword("else")) {
        advance();
        expect(Tok::Colon, "after 'else'");
        s.has_else = true;
        s.else_block = parse_block({"end"});
      }
      const std::size_t end = peek().span.end;
      expect_keyword("end");
      return Stmt{std::move(s), {begin, end}};
    }
    if (at_keyword("repeat")) {
      advance();
      const Token& count = peek();
      if (count.kind != Tok::Number || std::trunc(count.number) != count.number ||
          count.text.find_first_of(".eE") != std::string_view::npos) {
        throw ParseError(ParseErrorKind::NonConstantLoopBound, count.span,
                         "repeat count must be a non-negative integer literal, "
                         "found " + found(count));
      }
      if (count.number > static_cast<double>(kMaxRepeatCount)) {
        throw ParseError(ParseErrorKind::NonConstantLoopBound, count.span,
                         "repeat count exceeds " +
                             std::to_string(kMaxRepeatCount));
      }
      advance();
      RepeatStmt s;
      s.count = static_cast<std::uint64_t>(count.number);
      expect(Tok::Colon, "after repeat count");
      s.body = parse_block({"end"});
      const std::size_t end = peek().span.end;
      expect_keyword("end");
      return Stmt{std::move(s), {begin, end}};
    }
    if (first.kind == Tok::Ident && !is_reserved(first.text) &&
        peek(1).kind == Tok::Assign) {
      advance();
      advance();
      Assign s;
      s.target = std::string(first.text);
      s.value = parse_expr();
      const std::size_t end = s.value->span.end;
      return Stmt{std::move(s), {begin, end}};
    }
    fail(first, "expected statement");
  }

  Comparison parse_cmp() {
    Comparison c;
    c.lhs = parse_expr();
    switch (peek().kind) {
      case Tok::Lt: c.op = CmpOp::Lt; break;
      case Tok::Le: c.op = CmpOp::Le; break;
      case Tok::Gt: c.op = CmpOp::Gt; break;
      case Tok::Ge: c.op = CmpOp::Ge; break;
      case Tok::EqEq: c.op = CmpOp::Eq; break;
      default: fail(peek(), "expected comparison operator");
    }
    advance();
    c.rhs = parse_expr();
    return c;
  }

  // --- expressions ---
  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (at(Tok::Plus) || at(Tok::Minus)) {
      const ElemOp op = advance().kind == Tok::Plus ? ElemOp::Add : ElemOp::Sub;
      ExprPtr rhs = parse_term();
      const SourceSpan span{lhs->span.begin, rhs->span.end};
      lhs = make_expr(BinaryExpr{op, std::move(lhs), std::move(rhs)}, span);
    }
    return lhs;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_unary();
    while (at(Tok::Star) || at(Tok::Slash)) {
      const ElemOp op = advance().kind == Tok::Star ? ElemOp::Mul : ElemOp::Div;
      ExprPtr rhs = parse_unary();
      const SourceSpan span{lhs->span.begin, rhs->span.end};
      lhs = make_expr(BinaryExpr{op, std::move(lhs), std::move(rhs)}, span);
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    DepthGuard guard(*this, peek());
    if (at(Tok::Minus)) {
      const std::size_t begin = advance().span.begin;
      ExprPtr operand = parse_unary();
      const SourceSpan span{begin, operand->span.end};
      return make_expr(UnaryExpr{ElemOp::Neg, std::move(operand)}, span);
    }
    return parse_power();
  }

  ExprPtr parse_power() {
    ExprPtr base = parse_atom();
    if (!at(Tok::Caret)) return base;
    advance();
    ExprPtr exponent = parse_unary();
    const SourceSpan span{base->span.begin, exponent->span.end};
    return make_expr(BinaryExpr{ElemOp::Pow, std::move(base), std::move(exponent)},
                     span);
  }

  ExprPtr parse_atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Number:
        advance();
        return make_expr(NumberLit{t.number}, t.span);
      case Tok::LParen: {
        advance();
        ExprPtr inner = parse_expr();
        const Token& close = expect(Tok::RParen, "to close '('");
        inner->span = {t.span.begin, close.span.end};
        return inner;
      }
      case Tok::Ident: {
        if (auto op = function_op(t.text)) {
          advance();
          expect(Tok::LParen, "after function name");
          ExprPtr arg = parse_expr();
          const Token& close = expect(Tok::RParen, "to close function call");
          return make_expr(UnaryExpr{*op, std::move(arg)},
                           {t.span.begin, close.span.end});
        }
        if (is_keyword(t.text)) fail(t, "expected expression");
        advance();
        if (bare_ && std::find(inferred_.begin(), inferred_.end(), t.text) ==
                         inferred_.end()) {
          inferred_.emplace_back(t.text);
        }
        return make_expr(VarRef{std::string(t.text)}, t.span);
      }
      default:
        fail(t, "expected expression");
    }
  }

  std::string_view source_;
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
  bool bare_ = false;
  std::vector<std::string> inferred_;
};

// Definite-assignment analysis: every read must be preceded on all paths by
// a write or be a parameter.
class AssignmentChecker {
 public:
  explicit AssignmentChecker(const ProgramAst& program)
      : params_(program.params.begin(), program.params.end()) {}

  void run(const ProgramAst& program) {
    std::set<std::string> defined = params_;
    walk(program.body, defined);
    for (const ExprPtr& e : program.returns) check(*e, defined);
  }

 private:
  void walk(const Block& block, std::set<std::string>& defined) {
    for (const Stmt& stmt : block) {
      if (const auto* a = std::get_if<Assign>(&stmt.node)) {
        check(*a->value, defined);
        if (params_.count(a->target) != 0) {
          throw ParseError(ParseErrorKind::AssignToParameter, stmt.span,
                           "parameter '" + a->target + "' is read-only");
        }
        defined.insert(a->target);
      } else if (const auto* s = std::get_if<IfStmt>(&stmt.node)) {
        check(*s->cond.lhs, defined);
        check(*s->cond.rhs, defined);
        std::set<std::string> then_defs = defined;
        std::set<std::string> else_defs = defined;
        walk(s->then_block, then_defs);
        walk(s->else_block, else_defs);
        std::set<std::string> both;
        std::set_intersection(then_defs.begin(), then_defs.end(),
                              else_defs.begin(), else_defs.end(),
                              std::inserter(both, both.begin()));
        defined = std::move(both);
      } else if (const auto* r = std::get_if<RepeatStmt>(&stmt.node)) {
        std::set<std::string> body_defs = defined;
        walk(r->body, body_defs);
        if (r->count > 0) defined = std::move(body_defs);
      }
    }
  }

  void check(const Expr& e, const std::set<std::string>& defined) const {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, VarRef>) {
            if (defined.count(n.name) == 0) {
              throw ParseError(ParseErrorKind::UseBeforeAssignment, e.span,
                               "'" + n.name + "' is used before assignment");
            }
          } else if constexpr (std::is_same_v<T, UnaryExpr>) {
            check(*n.operand, defined);
          } else if constexpr (std::is_same_v<T, BinaryExpr>) {
            check(*n.lhs, defined);
            check(*n.rhs, defined);
          }
        },
        e.node);
  }

  std::set<std::string> params_;
};

}  // namespace

ParseError::ParseError(ParseErrorKind kind, SourceSpan span,
                       const std::string& message)
    : std::runtime_error("offset " + std::to_string(span.begin) + ": " + message),
      kind_(kind),
      span_(span),
      message_(message) {}

ProgramAst parse(std::string_view source) {
  Parser parser(source);
  ProgramAst program = parser.parse_source();
  if (!program.bare) AssignmentChecker(program).run(program);
  return program;
}

}  // namespace wengert::lang
