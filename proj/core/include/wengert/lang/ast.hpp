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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "wengert/elem_op.hpp"

namespace wengert::lang {

// Byte offsets [begin, end) into the source text.
struct SourceSpan {
  std::size_t begin = 0;
  std::size_t end = 0;
};

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct NumberLit {
  double value = 0.0;
};

struct VarRef {
  std::string name;
};

// Neg or one of the built-in functions (ln, exp, sin, cos, tan, sqrt).
struct UnaryExpr {
  ElemOp op;
  ExprPtr operand;
};

// Add, Sub, Mul, Div or Pow.
struct BinaryExpr {
  ElemOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Expr {
  std::variant<NumberLit, VarRef, UnaryExpr, BinaryExpr> node;
  SourceSpan span;
};

enum class CmpOp { Lt, Le, Gt, Ge, Eq };

struct Comparison {
  CmpOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Stmt;
using Block = std::vector<Stmt>;

struct Assign {
  std::string target;
  ExprPtr value;
};

struct IfStmt {
  Comparison cond;
  Block then_block;
  Block else_block;
  bool has_else = false;
};

// Loop body repeated `count` times at trace time.
struct RepeatStmt {
  std::uint64_t count = 0;
  Block body;
};

struct Stmt {
  std::variant<Assign, IfStmt, RepeatStmt> node;
  SourceSpan span;
};

struct ProgramAst {
  std::vector<std::string> params;
  Block body;
  std::vector<ExprPtr> returns;
  // Parsed from a bare expression list; parameters were inferred in
  // first-use order.
  bool bare = false;
};

std::string_view cmp_symbol(CmpOp op) noexcept;

// Structural equality that ignores source spans.
bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const ProgramAst& a, const ProgramAst& b);

// Number of operator (unary/binary) nodes in an expression.
std::size_t operator_count(const Expr& e);

}  // namespace wengert::lang

namespace wengert::lang {

// Deep copies; the AST owns its children uniquely.
ExprPtr clone(const Expr& e);
ProgramAst clone(const ProgramAst& program);

}  // namespace wengert::lang
