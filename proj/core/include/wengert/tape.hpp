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
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include "wengert/dual.hpp"
#include "wengert/elem_op.hpp"

namespace wengert {

// Tally of sweep steps, used to check the cost claims of each mode.
//
//   primal_ops   one per working node evaluated
//   tangent_ops  one per parent edge that carries a tangent channel
//   adjoint_ops  one per parent edge accumulated in a reverse sweep
//
// A sweep over Dual scalars counts each step once in its own bucket and
// once more in tangent_ops for the tangent channel.
struct OpCounter {
  std::uint64_t primal_ops = 0;
  std::uint64_t tangent_ops = 0;
  std::uint64_t adjoint_ops = 0;

  std::uint64_t total() const noexcept {
    return primal_ops + tangent_ops + adjoint_ops;
  }
  OpCounter& operator+=(const OpCounter& o) noexcept {
    primal_ops += o.primal_ops;
    tangent_ops += o.tangent_ops;
    adjoint_ops += o.adjoint_ops;
    return *this;
  }
};

// One entry of the evaluation trace. `value` and `partials` are filled by
// forward_sweep; before that they are zero.
struct TraceNode {
  ElemOp op = ElemOp::Const;
  std::array<NodeIndex, kMaxArity> parent_slots{};
  double constant = 0.0;
  double value = 0.0;
  std::array<double, kMaxArity> partial_slots{};

  std::span<const NodeIndex> parents() const noexcept {
    return {parent_slots.data(), arity(op)};
  }
  std::span<const double> partials() const noexcept {
    return {partial_slots.data(), arity(op)};
  }
};

// Raised when a sweep needs state that has not been produced yet, e.g. a
// reverse sweep over a tape whose forward sweep has not run.
class SweepOrderError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Append-only Wengert list. Node indices are dense and 0-based; the first
// num_inputs() nodes are the independent variables, and every parent index
// is strictly smaller than the node that refers to it.
class Tape {
 public:
  Tape() = default;

  // Inputs must be recorded before any other node.
  NodeIndex add_input();
  NodeIndex add_constant(double value);

  // Generic recording entry point. Throws std::invalid_argument on an arity
  // mismatch, std::out_of_range on a bad parent index.
  NodeIndex record(ElemOp op, std::span<const NodeIndex> parents,
                   double constant = 0.0);
  NodeIndex record(ElemOp op, std::initializer_list<NodeIndex> parents,
                   double constant = 0.0) {
    return record(op, std::span<const NodeIndex>(parents.begin(), parents.size()),
                  constant);
  }

  void mark_output(NodeIndex node);

  std::size_t size() const noexcept { return nodes_.size(); }
  bool empty() const noexcept { return nodes_.empty(); }
  std::size_t num_inputs() const noexcept { return num_inputs_; }
  std::size_t num_outputs() const noexcept { return outputs_.size(); }
  std::span<const NodeIndex> outputs() const noexcept { return outputs_; }
  std::span<const TraceNode> nodes() const noexcept { return nodes_; }
  const TraceNode& node(NodeIndex i) const { return nodes_.at(i); }

  // Number of non-leaf nodes, and of parent links over the whole tape.
  std::size_t working_count() const noexcept;
  std::size_t edge_count() const noexcept;

  // True once forward_sweep has populated values and partials and no node
  // has been appended since.
  bool evaluated() const noexcept { return evaluated_; }

  // Display label used in trace listings: node i is shown as v_{i - n + 1},
  // so inputs read v_{1-n} .. v_0.
  long display_label(NodeIndex i) const noexcept {
    return static_cast<long>(i) - static_cast<long>(num_inputs_) + 1;
  }

 private:
  friend std::vector<double> forward_sweep(Tape&, std::span<const double>,
                                           OpCounter*);

  std::vector<TraceNode> nodes_;
  std::vector<NodeIndex> outputs_;
  std::size_t num_inputs_ = 0;
  bool evaluated_ = false;
};

template <class Scalar>
inline constexpr bool is_dual_v = false;
template <class T>
inline constexpr bool is_dual_v<Dual<T>> = true;

// Values and local partials of every node for one input point, held outside
// the tape so several evaluations can share one recorded structure.
template <class Scalar>
struct Evaluation {
  std::vector<Scalar> values;
  std::vector<std::array<Scalar, kMaxArity>> partials;

  std::vector<Scalar> outputs(const Tape& tape) const {
    std::vector<Scalar> out;
    out.reserve(tape.num_outputs());
    for (NodeIndex o : tape.outputs()) out.push_back(values[o]);
    return out;
  }
};

void require_outputs(const Tape& tape);

// Scalar-generic forward evaluation over a recorded tape. With Scalar =
// Dual<double> this is forward-mode AD over the tape; its partials carry
// tangents too, which is what forward-over-reverse needs.
template <class Scalar>
Evaluation<Scalar> evaluate(const Tape& tape, std::span<const Scalar> inputs,
                            OpCounter* counter = nullptr) {
  if (inputs.size() != tape.num_inputs()) {
    throw std::invalid_argument("evaluate: expected " +
                                std::to_string(tape.num_inputs()) +
                                " inputs, got " + std::to_string(inputs.size()));
  }
  require_outputs(tape);
  const std::size_t size = tape.size();
  Evaluation<Scalar> ev;
  ev.values.assign(size, Scalar(0.0));
  ev.partials.assign(size, {Scalar(0.0), Scalar(0.0)});

  for (NodeIndex i = 0; i < size; ++i) {
    const TraceNode& node = tape.node(i);
    switch (node.op) {
      case ElemOp::Input:
        ev.values[i] = inputs[i];
        continue;
      case ElemOp::Const:
        ev.values[i] = Scalar(node.constant);
        continue;
      default:
        break;
    }
    const auto parents = node.parents();
    const Scalar& a = ev.values[parents[0]];
    const Scalar b = parents.size() > 1 ? ev.values[parents[1]] : Scalar(0.0);
    try {
      check_domain(node.op, primal_of(a), primal_of(b));
      if (node.op == ElemOp::Pow && primal_of(a) < 0.0 &&
          tape.node(parents[1]).op != ElemOp::Const) {
        throw DomainError(node.op,
                          "negative base requires a constant exponent");
      }
      ev.values[i] = apply_op(node.op, a, b);
      ev.partials[i] = op_partials(node.op, a, b, ev.values[i]);
      if (!std::isfinite(primal_of(ev.values[i]))) {
        throw DomainError(node.op, "result is not finite");
      }
      for (std::size_t s = 0; s < parents.size(); ++s) {
        if (!std::isfinite(primal_of(ev.partials[i][s]))) {
          throw DomainError(node.op, "local partial is not finite");
        }
      }
    } catch (const DomainError& e) {
      throw e.at_node(i);
    }
    if (counter != nullptr) {
      ++counter->primal_ops;
      if constexpr (is_dual_v<Scalar>) counter->tangent_ops += parents.size();
    }
  }
  return ev;
}

// Populates every node's value and partials on the tape itself and returns
// the outputs. Adds one primal op per working node to `counter`.
std::vector<double> forward_sweep(Tape& tape, std::span<const double> inputs,
                                  OpCounter* counter = nullptr);

}  // namespace wengert
