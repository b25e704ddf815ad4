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

#include <span>
#include <vector>

#include "wengert/matrix.hpp"
#include "wengert/tape.hpp"

namespace wengert {

// Per-node sensitivities of one output. After a sweep, the entries at the
// input nodes are the gradient components.
struct AdjointVector {
  std::vector<double> adjoints;
  std::size_t num_inputs = 0;

  std::span<const double> input_adjoints() const noexcept {
    return std::span<const double>(adjoints).first(num_inputs);
  }
};

// One accumulation step of the reverse sweep, reported to observers in
// execution order.
template <class Scalar>
struct AdjointStep {
  NodeIndex node;     // node whose adjoint is being distributed
  std::size_t slot;   // parent slot
  NodeIndex parent;
  bool first_write;   // parent adjoint was untouched before this step
  Scalar contribution;
  Scalar parent_adjoint;  // after accumulation
};

struct NoStepObserver {
  template <class Step>
  void operator()(const Step&) const noexcept {}
};

// Scalar-generic adjoint propagation. Visits nodes in strictly descending
// index order and accumulates adjoint[parent] += adjoint[node] * partial.
// Works for any Scalar with + and *, so it runs over Dual partials for
// forward-over-reverse.
template <class Scalar, class Observer = NoStepObserver>
std::vector<Scalar> propagate_adjoints(
    const Tape& tape, std::span<const std::array<Scalar, kMaxArity>> partials,
    NodeIndex output_node, const Scalar& seed, OpCounter* counter = nullptr,
    Observer&& observer = {}) {
  std::vector<Scalar> adjoints(tape.size(), Scalar(0.0));
  std::vector<bool> touched(tape.size(), false);
  adjoints.at(output_node) = seed;
  touched[output_node] = true;
  for (NodeIndex i = tape.size(); i-- > 0;) {
    const auto parents = tape.node(i).parents();
    if (parents.empty()) continue;
    const Scalar adj = adjoints[i];
    for (std::size_t s = 0; s < parents.size(); ++s) {
      const NodeIndex p = parents[s];
      const Scalar contribution = adj * partials[i][s];
      const bool first = !touched[p];
      adjoints[p] = first ? contribution : adjoints[p] + contribution;
      touched[p] = true;
      observer(AdjointStep<Scalar>{i, s, p, first, contribution, adjoints[p]});
    }
    if (counter != nullptr) {
      counter->adjoint_ops += parents.size();
      if constexpr (is_dual_v<Scalar>) counter->tangent_ops += parents.size();
    }
  }
  return adjoints;
}

// Reverse sweep over a tape populated by forward_sweep, seeded with
// `output_seed` at output `output_position`. Throws SweepOrderError if the
// tape has not been forward-swept.
AdjointVector reverse_sweep(const Tape& tape, std::size_t output_position,
                            double output_seed = 1.0,
                            OpCounter* counter = nullptr);

// Gradient of a single-output tape: one evaluation plus one reverse sweep.
std::vector<double> gradient(const Tape& tape, std::span<const double> inputs,
                             OpCounter* counter = nullptr);

// m x n Jacobian from exactly m reverse sweeps.
Matrix jacobian_reverse(const Tape& tape, std::span<const double> inputs,
                        OpCounter* counter = nullptr);

}  // namespace wengert
