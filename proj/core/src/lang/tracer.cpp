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

#include "wengert/lang/tracer.hpp"

#include <map>
#include <memory>
#include <optional>
#include <type_traits>
#include <variant>

namespace wengert::lang {
namespace {

// A traced value is either passive (a literal-only computation, never
// recorded) or active (backed by a tape node).
struct Value {
  std::optional<NodeIndex> node;
  double value = 0.0;
};

class Tracer {
 public:
  explicit Tracer(const ProgramAst& program) : program_(program) {}

  Tape run(std::span<const double> inputs, OpCounter* counter) {
    if (inputs.size() != program_.params.size()) {
      throw std::invalid_argument(
          "trace: expected " + std::to_string(program_.params.size()) +
          " inputs, got " + std::to_string(inputs.size()));
    }
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      vars_[program_.params[i]] = Value{tape_.add_input(), inputs[i]};
    }
    exec(program_.body);
    for (const ExprPtr& r : program_.returns) {
      tape_.mark_output(materialize(eval(*r)));
    }
    forward_sweep(tape_, inputs, counter);
    return std::move(tape_);
  }

 private:
  NodeIndex materialize(const Value& v) {
    return v.node ? *v.node : tape_.add_constant(v.value);
  }

  Value apply(ElemOp op, const Value& a, const Value& b) {
    const bool binary = arity(op) == 2;
    if (!a.node && (!binary || !b.node)) {
      check_domain(op, a.value, b.value);
      const double r = apply_op(op, a.value, b.value);
      if (!std::isfinite(r)) throw DomainError(op, "result is not finite");
      return Value{std::nullopt, r};
    }
    NodeIndex i;
    if (binary) {
      const NodeIndex pa = materialize(a);
      const NodeIndex pb = materialize(b);
      i = tape_.record(op, {pa, pb});
    } else {
      i = tape_.record(op, {*a.node});
    }
    try {
      check_domain(op, a.value, b.value);
      if (op == ElemOp::Pow && a.value < 0.0 && b.node) {
        throw DomainError(op, "negative base requires a constant exponent");
      }
      const double r = apply_op(op, a.value, b.value);
      if (!std::isfinite(r)) throw DomainError(op, "result is not finite");
      return Value{i, r};
    } catch (const DomainError& e) {
      throw e.at_node(i);
    }
  }

  Value eval(const Expr& e) {
    return std::visit(
        [&](const auto& x) -> Value {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, NumberLit>) {
            return Value{std::nullopt, x.value};
          } else if constexpr (std::is_same_v<T, VarRef>) {
            auto it = vars_.find(x.name);
            if (it == vars_.end()) {
              throw TraceError(e.span, "'" + x.name + "' is not assigned");
            }
            return it->second;
          } else if constexpr (std::is_same_v<T, UnaryExpr>) {
            return apply(x.op, eval(*x.operand), Value{});
          } else {
            const Value lhs = eval(*x.lhs);
            const Value rhs = eval(*x.rhs);
            return apply(x.op, lhs, rhs);
          }
        },
        e.node);
  }

  bool compare(const Comparison& c, SourceSpan span) {
    const double a = eval(*c.lhs).value;
    const double b = eval(*c.rhs).value;
    if (!std::isfinite(a) || !std::isfinite(b)) {
      throw TraceError(span, "comparison on a non-finite value");
    }
    switch (c.op) {
      case CmpOp::Lt: return a < b;
      case CmpOp::Le: return a <= b;
      case CmpOp::Gt: return a > b;
      case CmpOp::Ge: return a >= b;
      case CmpOp::Eq: return a == b;
    }
    return false;
  }

  void exec(const Block& block) {
    for (const Stmt& stmt : block) {
      std::visit(
          [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, Assign>) {
              vars_[s.target] = eval(*s.value);
            } else if constexpr (std::is_same_v<T, IfStmt>) {
              exec(compare(s.cond, stmt.span) ? s.then_block : s.else_block);
            } else {
              for (std::uint64_t k = 0; k < s.count; ++k) exec(s.body);
            }
          },
          stmt.node);
    }
  }

  const ProgramAst& program_;
  Tape tape_;
  std::map<std::string, Value, std::less<>> vars_;
};

}  // namespace

Tape trace(const ProgramAst& program, std::span<const double> inputs,
           OpCounter* counter) {
  return Tracer(program).run(inputs, counter);
}

TapeBuilder make_tape_builder(const ProgramAst& program) {
  auto shared = std::make_shared<const ProgramAst>(clone(program));
  return [shared](std::span<const double> inputs) {
    return trace(*shared, inputs);
  };
}

TraceLabels labels_for(const ProgramAst& program) {
  return TraceLabels{program.params, {}};
}

}  // namespace wengert::lang
