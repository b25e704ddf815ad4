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

#include "wengert/tape.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace wengert {

NodeIndex Tape::add_input() { return record(ElemOp::Input, {}); }

NodeIndex Tape::add_constant(double value) {
  return record(ElemOp::Const, {}, value);
}

NodeIndex Tape::record(ElemOp op, std::span<const NodeIndex> parents,
                       double constant) {
  if (parents.size() != arity(op)) {
    throw std::invalid_argument(
        "record: " + std::string(op_name(op)) + " expects " +
        std::to_string(arity(op)) + " parent(s), got " +
        std::to_string(parents.size()));
  }
  if (op == ElemOp::Input && num_inputs_ != nodes_.size()) {
    throw std::invalid_argument(
        "record: inputs must be recorded before any other node");
  }
  TraceNode node;
  node.op = op;
  node.constant = op == ElemOp::Const ? constant : 0.0;
  for (std::size_t s = 0; s < parents.size(); ++s) {
    if (parents[s] >= nodes_.size()) {
      throw std::out_of_range("record: parent index " +
                              std::to_string(parents[s]) +
                              " out of range for tape of size " +
                              std::to_string(nodes_.size()));
    }
    node.parent_slots[s] = parents[s];
  }
  nodes_.push_back(node);
  if (op == ElemOp::Input) ++num_inputs_;
  evaluated_ = false;
  return nodes_.size() - 1;
}

void Tape::mark_output(NodeIndex node) {
  if (node >= nodes_.size()) {
    throw std::out_of_range("mark_output: node " + std::to_string(node) +
                            " out of range");
  }
  outputs_.push_back(node);
}

std::size_t Tape::working_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      nodes_.begin(), nodes_.end(),
      [](const TraceNode& n) { return !is_leaf(n.op); }));
}

std::size_t Tape::edge_count() const noexcept {
  return std::accumulate(nodes_.begin(), nodes_.end(), std::size_t{0},
                         [](std::size_t acc, const TraceNode& n) {
                           return acc + arity(n.op);
                         });
}

void require_outputs(const Tape& tape) {
  if (tape.num_outputs() == 0) {
    throw std::invalid_argument("tape has no outputs marked");
  }
}

std::vector<double> forward_sweep(Tape& tape, std::span<const double> inputs,
                                  OpCounter* counter) {
  tape.evaluated_ = false;
  Evaluation<double> ev = evaluate<double>(tape, inputs, counter);
  for (NodeIndex i = 0; i < tape.nodes_.size(); ++i) {
    tape.nodes_[i].value = ev.values[i];
    tape.nodes_[i].partial_slots = ev.partials[i];
  }
  tape.evaluated_ = true;
  return ev.outputs(tape);
}

}  // namespace wengert
