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

#include "wengert/symbolic.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <variant>
#include <vector>

#include "wengert/trace_format.hpp"

namespace wengert::baseline {

struct SymExpr::Node {
  ElemOp op = ElemOp::Const;
  double value = 0.0;
  std::string name;
  std::vector<SymExpr> operands;
  std::size_t size = 1;
};

SymExpr SymExpr::constant(double value) {
  auto n = std::make_shared<Node>();
  n->op = ElemOp::Const;
  n->value = value;
  return SymExpr(std::move(n));
}

SymExpr SymExpr::variable(std::string name) {
  auto n = std::make_shared<Node>();
  n->op = ElemOp::Input;
  n->name = std::move(name);
  return SymExpr(std::move(n));
}

SymExpr SymExpr::unary(ElemOp op, SymExpr operand) {
  if (arity(op) != 1) throw std::invalid_argument("SymExpr::unary: not unary");
  auto n = std::make_shared<Node>();
  n->op = op;
  n->size = 1 + operand.size();
  n->operands.push_back(std::move(operand));
  return SymExpr(std::move(n));
}

SymExpr SymExpr::binary(ElemOp op, SymExpr lhs, SymExpr rhs) {
  if (arity(op) != 2) throw std::invalid_argument("SymExpr::binary: not binary");
  auto n = std::make_shared<Node>();
  n->op = op;
  n->size = 1 + lhs.size() + rhs.size();
  n->operands.push_back(std::move(lhs));
  n->operands.push_back(std::move(rhs));
  return SymExpr(std::move(n));
}

ElemOp SymExpr::op() const noexcept { return node_->op; }
double SymExpr::value() const noexcept { return node_->value; }
const std::string& SymExpr::name() const noexcept { return node_->name; }
std::size_t SymExpr::size() const noexcept { return node_->size; }

const SymExpr& SymExpr::lhs() const {
  if (node_->operands.empty()) {
    throw std::logic_error("SymExpr::lhs: leaf has no operands");
  }
  return node_->operands[0];
}

const SymExpr& SymExpr::rhs() const {
  if (node_->operands.size() < 2) {
    throw std::logic_error("SymExpr::rhs: no second operand");
  }
  return node_->operands[1];
}

bool SymExpr::is_constant(double v) const noexcept {
  return node_->op == ElemOp::Const && node_->value == v;
}

namespace {

// Folds an op over constant operands when the result is defined and finite.
std::optional<double> fold(ElemOp op, double a, double b) {
  try {
    check_domain(op, a, b);
  } catch (const DomainError&) {
    return std::nullopt;
  }
  const double r = apply_op(op, a, b);
  if (!std::isfinite(r)) return std::nullopt;
  return r;
}

}  // namespace

SymExpr make_unary(ElemOp op, const SymExpr& a, Simplify level) {
  if (a.op() == ElemOp::Const) {
    if (auto r = fold(op, a.value(), 0.0)) return SymExpr::constant(*r);
  }
  if (level == Simplify::Extended && op == ElemOp::Neg && a.op() == ElemOp::Neg) {
    return a.lhs();
  }
  return SymExpr::unary(op, a);
}

SymExpr make_binary(ElemOp op, const SymExpr& a, const SymExpr& b,
                    Simplify level) {
  if (a.op() == ElemOp::Const && b.op() == ElemOp::Const) {
    if (auto r = fold(op, a.value(), b.value())) return SymExpr::constant(*r);
  }
  switch (op) {
    case ElemOp::Mul:
      if (a.is_constant(0.0) || b.is_constant(0.0)) return SymExpr::constant(0.0);
      if (a.is_constant(1.0)) return b;
      if (b.is_constant(1.0)) return a;
      break;
    case ElemOp::Add:
      if (a.is_constant(0.0)) return b;
      if (b.is_constant(0.0)) return a;
      break;
    case ElemOp::Pow:
      if (b.is_constant(1.0)) return a;
      if (level == Simplify::Extended && b.is_constant(0.0)) {
        return SymExpr::constant(1.0);
      }
      break;
    case ElemOp::Sub:
      if (level == Simplify::Extended) {
        if (b.is_constant(0.0)) return a;
        if (a.is_constant(0.0)) return make_unary(ElemOp::Neg, b, level);
      }
      break;
    case ElemOp::Div:
      if (level == Simplify::Extended) {
        if (b.is_constant(1.0)) return a;
        if (a.is_constant(0.0)) return SymExpr::constant(0.0);
      }
      break;
    default:
      break;
  }
  return SymExpr::binary(op, a, b);
}

bool depends_on(const SymExpr& e, std::string_view var) {
  switch (e.op()) {
    case ElemOp::Const: return false;
    case ElemOp::Input: return e.name() == var;
    default:
      if (depends_on(e.lhs(), var)) return true;
      return arity(e.op()) == 2 && depends_on(e.rhs(), var);
  }
}

SymExpr sym_diff(const SymExpr& e, std::string_view var, Simplify level) {
  const auto C = [](double v) { return SymExpr::constant(v); };
  const auto U = [level](ElemOp op, const SymExpr& a) {
    return make_unary(op, a, level);
  };
  const auto B = [level](ElemOp op, const SymExpr& a, const SymExpr& b) {
    return make_binary(op, a, b, level);
  };

  switch (e.op()) {
    case ElemOp::Const: return C(0.0);
    case ElemOp::Input: return C(e.name() == var ? 1.0 : 0.0);
    default: break;
  }
  const SymExpr& u = e.lhs();
  const SymExpr du = sym_diff(u, var, level);
  switch (e.op()) {
    case ElemOp::Add:
      return B(ElemOp::Add, du, sym_diff(e.rhs(), var, level));
    case ElemOp::Sub:
      return B(ElemOp::Sub, du, sym_diff(e.rhs(), var, level));
    case ElemOp::Mul: {
      const SymExpr& v = e.rhs();
      return B(ElemOp::Add, B(ElemOp::Mul, du, v),
               B(ElemOp::Mul, u, sym_diff(v, var, level)));
    }
    case ElemOp::Div: {
      const SymExpr& v = e.rhs();
      const SymExpr num = B(ElemOp::Sub, B(ElemOp::Mul, du, v),
                            B(ElemOp::Mul, u, sym_diff(v, var, level)));
      return B(ElemOp::Div, num, B(ElemOp::Pow, v, C(2.0)));
    }
    case ElemOp::Neg: return U(ElemOp::Neg, du);
    case ElemOp::Pow: {
      const SymExpr& v = e.rhs();
      if (!depends_on(v, var)) {
        // d(u^c) = c * u^(c-1) * du
        const SymExpr lowered = B(ElemOp::Pow, u, B(ElemOp::Sub, v, C(1.0)));
        return B(ElemOp::Mul, B(ElemOp::Mul, v, lowered), du);
      }
      // d(u^v) = u^v * (dv * ln(u) + v * du / u)
      const SymExpr inner =
          B(ElemOp::Add, B(ElemOp::Mul, sym_diff(v, var, level), U(ElemOp::Ln, u)),
            B(ElemOp::Div, B(ElemOp::Mul, v, du), u));
      return B(ElemOp::Mul, e, inner);
    }
    case ElemOp::Ln: return B(ElemOp::Div, du, u);
    case ElemOp::Exp: return B(ElemOp::Mul, e, du);
    case ElemOp::Sin: return B(ElemOp::Mul, U(ElemOp::Cos, u), du);
    case ElemOp::Cos:
      return B(ElemOp::Mul, U(ElemOp::Neg, U(ElemOp::Sin, u)), du);
    case ElemOp::Tan:
      return B(ElemOp::Div, du, B(ElemOp::Pow, U(ElemOp::Cos, u), C(2.0)));
    case ElemOp::Sqrt:
      return B(ElemOp::Div, du, B(ElemOp::Mul, C(2.0), e));
    default:
      throw std::invalid_argument("sym_diff: unsupported operation " +
                                  std::string(op_name(e.op())));
  }
}

double sym_eval(const SymExpr& e, const Bindings& bindings) {
  switch (e.op()) {
    case ElemOp::Const: return e.value();
    case ElemOp::Input: {
      auto it = bindings.find(e.name());
      if (it == bindings.end()) {
        throw std::invalid_argument("sym_eval: unbound variable '" + e.name() +
                                    "'");
      }
      return it->second;
    }
    default: break;
  }
  const double a = sym_eval(e.lhs(), bindings);
  const double b = arity(e.op()) == 2 ? sym_eval(e.rhs(), bindings) : 0.0;
  check_domain(e.op(), a, b);
  const double r = apply_op(e.op(), a, b);
  if (!std::isfinite(r)) throw DomainError(e.op(), "result is not finite");
  return r;
}

namespace {

enum Prec : int { kSum = 1, kProduct = 2, kUnary = 3, kPower = 4, kAtom = 5 };

int precedence(const SymExpr& e) {
  switch (e.op()) {
    case ElemOp::Const:
    case ElemOp::Input: return kAtom;
    case ElemOp::Add:
    case ElemOp::Sub: return kSum;
    case ElemOp::Mul:
    case ElemOp::Div: return kProduct;
    case ElemOp::Neg: return kUnary;
    case ElemOp::Pow: return kPower;
    default: return kAtom;
  }
}

void print(const SymExpr& e, std::string& out);

void operand(const SymExpr& e, int min_prec, std::string& out) {
  if (precedence(e) < min_prec) {
    out += '(';
    print(e, out);
    out += ')';
  } else {
    print(e, out);
  }
}

void print(const SymExpr& e, std::string& out) {
  switch (e.op()) {
    case ElemOp::Const:
      if (std::signbit(e.value())) {
        out += "(-" + format_shortest(-e.value()) + ")";
      } else {
        out += format_shortest(e.value());
      }
      return;
    case ElemOp::Input: out += e.name(); return;
    case ElemOp::Add:
    case ElemOp::Sub:
      operand(e.lhs(), kSum, out);
      out += e.op() == ElemOp::Add ? " + " : " - ";
      operand(e.rhs(), kProduct, out);
      return;
    case ElemOp::Mul:
    case ElemOp::Div:
      operand(e.lhs(), kProduct, out);
      out += e.op() == ElemOp::Mul ? " * " : " / ";
      operand(e.rhs(), kUnary, out);
      return;
    case ElemOp::Pow:
      operand(e.lhs(), kAtom, out);
      out += '^';
      operand(e.rhs(), kUnary, out);
      return;
    case ElemOp::Neg:
      out += '-';
      operand(e.lhs(), kUnary, out);
      return;
    default:
      out += op_name(e.op());
      out += '(';
      print(e.lhs(), out);
      out += ')';
      return;
  }
}

class Inliner {
 public:
  explicit Inliner(const lang::ProgramAst& program) {
    for (const std::string& p : program.params) env_.insert_or_assign(p, SymExpr::variable(p));
  }

  SymExpr expr(const lang::Expr& e) const {
    return std::visit(
        [&](const auto& x) -> SymExpr {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, lang::NumberLit>) {
            return SymExpr::constant(x.value);
          } else if constexpr (std::is_same_v<T, lang::VarRef>) {
            auto it = env_.find(x.name);
            if (it == env_.end()) return SymExpr::variable(x.name);
            return it->second;
          } else if constexpr (std::is_same_v<T, lang::UnaryExpr>) {
            const SymExpr a = expr(*x.operand);
            if (a.op() == ElemOp::Const) {
              if (auto r = fold(x.op, a.value(), 0.0)) return SymExpr::constant(*r);
            }
            return SymExpr::unary(x.op, a);
          } else {
            const SymExpr a = expr(*x.lhs), b = expr(*x.rhs);
            if (a.op() == ElemOp::Const && b.op() == ElemOp::Const) {
              if (auto r = fold(x.op, a.value(), b.value())) return SymExpr::constant(*r);
            }
            return SymExpr::binary(x.op, a, b);
          }
        },
        e.node);
  }

  void block(const lang::Block& b) {
    for (const lang::Stmt& s : b) {
      if (const auto* a = std::get_if<lang::Assign>(&s.node)) {
        env_.insert_or_assign(a->target, expr(*a->value));
      } else if (const auto* r = std::get_if<lang::RepeatStmt>(&s.node)) {
        for (std::uint64_t k = 0; k < r->count; ++k) block(r->body);
      } else {
        throw std::invalid_argument(
            "symbolic conversion needs a program without if-statements");
      }
    }
  }

 private:
  std::map<std::string, SymExpr, std::less<>> env_;
};

}  // namespace

std::string to_source(const SymExpr& expr) {
  std::string out;
  print(expr, out);
  return out;
}

SymExpr from_ast(const lang::Expr& expr) {
  lang::ProgramAst empty;
  return Inliner(empty).expr(expr);
}

SymExpr from_program(const lang::ProgramAst& program, std::size_t output) {
  if (output >= program.returns.size()) {
    throw std::out_of_range("from_program: output index out of range");
  }
  Inliner inliner(program);
  inliner.block(program.body);
  return inliner.expr(*program.returns[output]);
}

}  // namespace wengert::baseline
