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

#include "wengert/lang/printer.hpp"

#include <cmath>
#include <type_traits>
#include <variant>

#include "wengert/trace_format.hpp"

namespace wengert::lang {

std::string_view cmp_symbol(CmpOp op) noexcept {
  switch (op) {
    case CmpOp::Lt: return "<";
    case CmpOp::Le: return "<=";
    case CmpOp::Gt: return ">";
    case CmpOp::Ge: return ">=";
    case CmpOp::Eq: return "==";
  }
  return "?";
}

bool structurally_equal(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, NumberLit>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, VarRef>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, UnaryExpr>) {
          return x.op == y.op && structurally_equal(*x.operand, *y.operand);
        } else {
          return x.op == y.op && structurally_equal(*x.lhs, *y.lhs) &&
                 structurally_equal(*x.rhs, *y.rhs);
        }
      },
      a.node);
}

namespace {

bool blocks_equal(const Block& a, const Block& b);

bool stmts_equal(const Stmt& a, const Stmt& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, Assign>) {
          return x.target == y.target && structurally_equal(*x.value, *y.value);
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          return x.cond.op == y.cond.op &&
                 structurally_equal(*x.cond.lhs, *y.cond.lhs) &&
                 structurally_equal(*x.cond.rhs, *y.cond.rhs) &&
                 x.has_else == y.has_else &&
                 blocks_equal(x.then_block, y.then_block) &&
                 blocks_equal(x.else_block, y.else_block);
        } else {
          return x.count == y.count && blocks_equal(x.body, y.body);
        }
      },
      a.node);
}

bool blocks_equal(const Block& a, const Block& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!stmts_equal(a[i], b[i])) return false;
  }
  return true;
}

Block clone_block(const Block& block);

Stmt clone_stmt(const Stmt& s) {
  return std::visit(
      [&](const auto& x) -> Stmt {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Assign>) {
          return Stmt{Assign{x.target, clone(*x.value)}, s.span};
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          IfStmt c;
          c.cond = Comparison{x.cond.op, clone(*x.cond.lhs), clone(*x.cond.rhs)};
          c.then_block = clone_block(x.then_block);
          c.else_block = clone_block(x.else_block);
          c.has_else = x.has_else;
          return Stmt{std::move(c), s.span};
        } else {
          return Stmt{RepeatStmt{x.count, clone_block(x.body)}, s.span};
        }
      },
      s.node);
}

Block clone_block(const Block& block) {
  Block out;
  out.reserve(block.size());
  for (const Stmt& s : block) out.push_back(clone_stmt(s));
  return out;
}

// Binding strength used by the printer; higher binds tighter.
enum Prec : int { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

int precedence(const Expr& e) {
  return std::visit(
      [](const auto& x) -> int {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, NumberLit> || std::is_same_v<T, VarRef>) {
          return kAtom;
        } else if constexpr (std::is_same_v<T, UnaryExpr>) {
          return x.op == ElemOp::Neg ? kUnary : kAtom;
        } else {
          switch (x.op) {
            case ElemOp::Add:
            case ElemOp::Sub: return kSum;
            case ElemOp::Mul:
            case ElemOp::Div: return kProduct;
            default: return kPower;
          }
        }
      },
      e.node);
}

void print(const Expr& e, int min_prec, std::string& out);

void print_operand(const Expr& e, int min_prec, std::string& out) {
  if (precedence(e) < min_prec) {
    out += '(';
    print(e, 0, out);
    out += ')';
  } else {
    print(e, min_prec, out);
  }
}

void print(const Expr& e, int /*min_prec*/, std::string& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, NumberLit>) {
          if (x.value < 0.0 || std::signbit(x.value)) {
            out += "(-" + format_shortest(-x.value) + ")";
          } else {
            out += format_shortest(x.value);
          }
        } else if constexpr (std::is_same_v<T, VarRef>) {
          out += x.name;
        } else if constexpr (std::is_same_v<T, UnaryExpr>) {
          if (x.op == ElemOp::Neg) {
            out += '-';
            print_operand(*x.operand, kUnary, out);
          } else {
            out += op_name(x.op);
            out += '(';
            print(*x.operand, 0, out);
            out += ')';
          }
        } else {
          switch (x.op) {
            case ElemOp::Add:
            case ElemOp::Sub:
              print_operand(*x.lhs, kSum, out);
              out += x.op == ElemOp::Add ? " + " : " - ";
              print_operand(*x.rhs, kProduct, out);
              break;
            case ElemOp::Mul:
            case ElemOp::Div:
              print_operand(*x.lhs, kProduct, out);
              out += x.op == ElemOp::Mul ? " * " : " / ";
              print_operand(*x.rhs, kUnary, out);
              break;
            default:
              print_operand(*x.lhs, kAtom, out);
              out += '^';
              print_operand(*x.rhs, kUnary, out);
              break;
          }
        }
      },
      e.node);
}

void print_block(const Block& block, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (const Stmt& s : block) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Assign>) {
            out += pad + x.target + " = " + to_source(*x.value) + "\n";
          } else if constexpr (std::is_same_v<T, IfStmt>) {
            out += pad + "if " + to_source(*x.cond.lhs) + " " +
                   std::string(cmp_symbol(x.cond.op)) + " " +
                   to_source(*x.cond.rhs) + ":\n";
            print_block(x.then_block, indent + 1, out);
            if (x.has_else) {
              out += pad + "else:\n";
              print_block(x.else_block, indent + 1, out);
            }
            out += pad + "end\n";
          } else {
            out += pad + "repeat " + std::to_string(x.count) + ":\n";
            print_block(x.body, indent + 1, out);
            out += pad + "end\n";
          }
        },
        s.node);
  }
}

}  // namespace

bool structurally_equal(const ProgramAst& a, const ProgramAst& b) {
  if (a.params != b.params || a.bare != b.bare ||
      a.returns.size() != b.returns.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.returns.size(); ++i) {
    if (!structurally_equal(*a.returns[i], *b.returns[i])) return false;
  }
  return blocks_equal(a.body, b.body);
}

std::size_t operator_count(const Expr& e) {
  return std::visit(
      [](const auto& x) -> std::size_t {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, UnaryExpr>) {
          return 1 + operator_count(*x.operand);
        } else if constexpr (std::is_same_v<T, BinaryExpr>) {
          return 1 + operator_count(*x.lhs) + operator_count(*x.rhs);
        } else {
          return 0;
        }
      },
      e.node);
}

ExprPtr clone(const Expr& e) {
  auto out = std::make_unique<Expr>();
  out->span = e.span;
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, NumberLit> || std::is_same_v<T, VarRef>) {
          out->node = x;
        } else if constexpr (std::is_same_v<T, UnaryExpr>) {
          out->node = UnaryExpr{x.op, clone(*x.operand)};
        } else {
          out->node = BinaryExpr{x.op, clone(*x.lhs), clone(*x.rhs)};
        }
      },
      e.node);
  return out;
}

ProgramAst clone(const ProgramAst& program) {
  ProgramAst out;
  out.params = program.params;
  out.bare = program.bare;
  out.body = clone_block(program.body);
  for (const ExprPtr& r : program.returns) out.returns.push_back(clone(*r));
  return out;
}

std::string to_source(const Expr& expr) {
  std::string out;
  print(expr, 0, out);
  return out;
}

std::string to_source(const ProgramAst& program) {
  std::string out;
  auto returns = [&] {
    std::string r;
    for (std::size_t i = 0; i < program.returns.size(); ++i) {
      if (i > 0) r += ", ";
      r += to_source(*program.returns[i]);
    }
    return r;
  };
  if (program.bare) return returns();
  out += "params ";
  for (std::size_t i = 0; i < program.params.size(); ++i) {
    if (i > 0) out += ", ";
    out += program.params[i];
  }
  out += "\n";
  print_block(program.body, 0, out);
  out += "return " + returns() + "\n";
  return out;
}

}  // namespace wengert::lang
