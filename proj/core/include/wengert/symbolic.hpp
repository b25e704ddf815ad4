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
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <string_view>

#include "wengert/elem_op.hpp"
#include "wengert/lang/ast.hpp"

namespace wengert::baseline {

// Rules applied while building derivative trees.
//   Minimal:  constant folding, 0*e -> 0, 0+e -> e, 1*e -> e, e^1 -> e
//             (and their mirror images).
//   Extended: Minimal plus e-0 -> e, 0-e -> -e, e/1 -> e, 0/e -> 0,
//             --e -> e, e^0 -> 1.
// Minimal is the default so expression swell stays visible.
enum class Simplify { Minimal, Extended };

// Immutable expression tree over the elementary-op vocabulary. Leaves are
// ElemOp::Const (a number) and ElemOp::Input (a named variable). Subtrees
// may be shared, but size() counts the tree as if fully expanded.
class SymExpr {
 public:
  static SymExpr constant(double value);
  static SymExpr variable(std::string name);
  static SymExpr unary(ElemOp op, SymExpr operand);
  static SymExpr binary(ElemOp op, SymExpr lhs, SymExpr rhs);

  ElemOp op() const noexcept;
  double value() const noexcept;              // Const only
  const std::string& name() const noexcept;   // Input only
  const SymExpr& lhs() const;                 // first operand
  const SymExpr& rhs() const;                 // second operand

  std::size_t size() const noexcept;
  bool is_constant(double v) const noexcept;

 private:
  struct Node;
  explicit SymExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Simplifying constructors used by sym_diff.
SymExpr make_unary(ElemOp op, const SymExpr& a, Simplify level);
SymExpr make_binary(ElemOp op, const SymExpr& a, const SymExpr& b,
                    Simplify level);

bool depends_on(const SymExpr& e, std::string_view var);

// Exact structural derivative; never evaluates variables.
SymExpr sym_diff(const SymExpr& expr, std::string_view var,
                 Simplify level = Simplify::Minimal);

using Bindings = std::map<std::string, double, std::less<>>;

// Throws std::invalid_argument for an unbound variable and DomainError
// outside an op's domain.
double sym_eval(const SymExpr& expr, const Bindings& bindings);

// Expression-language source; parses back to an equivalent expression.
std::string to_source(const SymExpr& expr);

SymExpr from_ast(const lang::Expr& expr);

// Inlines assignments and unrolls repeat-loops. Programs with if-statements
// are rejected (std::invalid_argument): the taken branch depends on numeric
// values, which a symbolic derivative does not have.
SymExpr from_program(const lang::ProgramAst& program, std::size_t output = 0);

}  // namespace wengert::baseline
