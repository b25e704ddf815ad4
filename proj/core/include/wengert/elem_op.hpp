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

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wengert {

using NodeIndex = std::size_t;

// The elementary operations a trace is built from. Input and Const are
// leaves; every other kind has a local partial-derivative rule per parent.
enum class ElemOp : std::uint8_t {
  Add,
  Sub,
  Mul,
  Div,
  Neg,
  Pow,
  Ln,
  Exp,
  Sin,
  Cos,
  Tan,
  Sqrt,
  Const,
  Input,
};

inline constexpr std::size_t kMaxArity = 2;

constexpr std::size_t arity(ElemOp op) noexcept {
  switch (op) {
    case ElemOp::Const:
    case ElemOp::Input:
      return 0;
    case ElemOp::Add:
    case ElemOp::Sub:
    case ElemOp::Mul:
    case ElemOp::Div:
    case ElemOp::Pow:
      return 2;
    default:
      return 1;
  }
}

constexpr bool is_leaf(ElemOp op) noexcept {
  return op == ElemOp::Const || op == ElemOp::Input;
}

// "add", "ln", ...
std::string_view op_name(ElemOp op) noexcept;

// Infix symbol for binary ops and Neg, function name for the rest.
std::string_view op_symbol(ElemOp op) noexcept;

// Raised when an operation is evaluated outside its domain, or when its
// value or local partials are not finite. Carries the offending trace node
// when the failure happened during a sweep.
class DomainError : public std::domain_error {
 public:
  DomainError(ElemOp op, std::string detail,
              std::optional<NodeIndex> node = std::nullopt);

  ElemOp op() const noexcept { return op_; }
  const std::string& detail() const noexcept { return detail_; }
  std::optional<NodeIndex> node() const noexcept { return node_; }

  DomainError at_node(NodeIndex node) const {
    return DomainError(op_, detail_, node);
  }

 private:
  ElemOp op_;
  std::string detail_;
  std::optional<NodeIndex> node_;
};

// Throws DomainError if (a, b) lies outside the domain of `op`, including
// points where the value exists but a local partial does not (ln and sqrt
// at zero, 0^b for 0 < b < 1). For unary ops `b` is ignored.
void check_domain(ElemOp op, double a, double b);

inline double primal_of(double x) noexcept { return x; }

// Value of a working op on scalar arguments. Scalar is double or Dual<double>;
// math functions are found by argument-dependent lookup.
template <class Scalar>
Scalar apply_op(ElemOp op, const Scalar& a, const Scalar& b) {
  using std::cos;
  using std::exp;
  using std::log;
  using std::pow;
  using std::sin;
  using std::sqrt;
  using std::tan;
  switch (op) {
    case ElemOp::Add: return a + b;
    case ElemOp::Sub: return a - b;
    case ElemOp::Mul: return a * b;
    case ElemOp::Div: return a / b;
    case ElemOp::Neg: return -a;
    case ElemOp::Pow: return pow(a, b);
    case ElemOp::Ln: return log(a);
    case ElemOp::Exp: return exp(a);
    case ElemOp::Sin: return sin(a);
    case ElemOp::Cos: return cos(a);
    case ElemOp::Tan: return tan(a);
    case ElemOp::Sqrt: return sqrt(a);
    case ElemOp::Const:
    case ElemOp::Input:
      break;
  }
  throw std::invalid_argument("apply_op: leaf operation has no value rule");
}

// Local partials d(value)/d(parent) for each parent slot. Unused slots are
// zero. The exponent partial of Pow is zero when the base is not positive;
// callers are responsible for rejecting a variable exponent in that case.
template <class Scalar>
std::array<Scalar, kMaxArity> op_partials(ElemOp op, const Scalar& a,
                                          const Scalar& b,
                                          const Scalar& value) {
  using std::cos;
  using std::log;
  using std::pow;
  using std::sin;
  const Scalar zero(0.0);
  const Scalar one(1.0);
  switch (op) {
    case ElemOp::Add: return {one, one};
    case ElemOp::Sub: return {one, -one};
    case ElemOp::Mul: return {b, a};
    case ElemOp::Div: return {one / b, -value / b};
    case ElemOp::Neg: return {-one, zero};
    case ElemOp::Pow: {
      Scalar d_base = primal_of(b) == 0.0 ? zero : b * pow(a, b - one);
      Scalar d_exp = primal_of(a) > 0.0 ? value * log(a) : zero;
      return {d_base, d_exp};
    }
    case ElemOp::Ln: return {one / a, zero};
    case ElemOp::Exp: return {value, zero};
    case ElemOp::Sin: return {cos(a), zero};
    case ElemOp::Cos: return {-sin(a), zero};
    case ElemOp::Tan: return {one + value * value, zero};
    case ElemOp::Sqrt: return {one / (Scalar(2.0) * value), zero};
    case ElemOp::Const:
    case ElemOp::Input:
      break;
  }
  throw std::invalid_argument("op_partials: leaf operation has no partials");
}

// Checked, list-shaped front end over check_domain/op_partials.
// Throws std::invalid_argument on an arity mismatch.
std::vector<double> local_partials(ElemOp op,
                                   std::span<const double> parent_values,
                                   double value);

}  // namespace wengert
