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

#include "wengert/elem_op.hpp"

#include <cmath>
#include <sstream>

namespace wengert {
namespace {

std::string describe(ElemOp op, const std::string& detail,
                     std::optional<NodeIndex> node) {
  std::ostringstream os;
  os << op_name(op) << ": " << detail;
  if (node) os << " (node " << *node << ")";
  return os.str();
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace

std::string_view op_name(ElemOp op) noexcept {
  switch (op) {
    case ElemOp::Add: return "add";
    case ElemOp::Sub: return "sub";
    case ElemOp::Mul: return "mul";
    case ElemOp::Div: return "div";
    case ElemOp::Neg: return "neg";
    case ElemOp::Pow: return "pow";
    case ElemOp::Ln: return "ln";
    case ElemOp::Exp: return "exp";
    case ElemOp::Sin: return "sin";
    case ElemOp::Cos: return "cos";
    case ElemOp::Tan: return "tan";
    case ElemOp::Sqrt: return "sqrt";
    case ElemOp::Const: return "const";
    case ElemOp::Input: return "input";
  }
  return "?";
}

std::string_view op_symbol(ElemOp op) noexcept {
  switch (op) {
    case ElemOp::Add: return "+";
    case ElemOp::Sub: return "-";
    case ElemOp::Mul: return "*";
    case ElemOp::Div: return "/";
    case ElemOp::Neg: return "-";
    case ElemOp::Pow: return "^";
    default: return op_name(op);
  }
}

DomainError::DomainError(ElemOp op, std::string detail,
                         std::optional<NodeIndex> node)
    : std::domain_error(describe(op, detail, node)),
      op_(op),
      detail_(std::move(detail)),
      node_(node) {}

void check_domain(ElemOp op, double a, double b) {
  switch (op) {
    case ElemOp::Div:
      if (b == 0.0) throw DomainError(op, "division by zero");
      break;
    case ElemOp::Ln:
      if (!(a > 0.0)) {
        throw DomainError(op, "argument must be positive, got " + fmt(a));
      }
      break;
    case ElemOp::Sqrt:
      if (a < 0.0) {
        throw DomainError(op, "argument must be non-negative, got " + fmt(a));
      }
      if (a == 0.0) throw DomainError(op, "not differentiable at 0");
      break;
    case ElemOp::Pow:
      if (a == 0.0 && b < 0.0) {
        throw DomainError(op, "zero base with negative exponent");
      }
      if (a == 0.0 && b > 0.0 && b < 1.0) {
        throw DomainError(op, "not differentiable at zero base for exponent " +
                                  fmt(b));
      }
      if (a < 0.0 && std::trunc(b) != b) {
        throw DomainError(op, "negative base with non-integer exponent " +
                                  fmt(b));
      }
      break;
    default:
      break;
  }
}

std::vector<double> local_partials(ElemOp op,
                                   std::span<const double> parent_values,
                                   double value) {
  if (is_leaf(op)) return {};
  if (parent_values.size() != arity(op)) {
    throw std::invalid_argument(std::string("local_partials: ") +
                                std::string(op_name(op)) + " takes " +
                                std::to_string(arity(op)) + " parent values");
  }
  const double a = parent_values[0];
  const double b = parent_values.size() > 1 ? parent_values[1] : 0.0;
  check_domain(op, a, b);
  const auto slots = op_partials<double>(op, a, b, value);
  std::vector<double> out(slots.begin(), slots.begin() + arity(op));
  for (double p : out) {
    if (!std::isfinite(p)) throw DomainError(op, "local partial is not finite");
  }
  return out;
}

}  // namespace wengert
