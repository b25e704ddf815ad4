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

#include "wengert/reverse.hpp"

#include <stdexcept>
#include <string>

namespace wengert {
namespace {

std::vector<std::array<double, kMaxArity>> stored_partials(const Tape& tape) {
  std::vector<std::array<double, kMaxArity>> partials;
  partials.reserve(tape.size());
  for (const TraceNode& n : tape.nodes()) partials.push_back(n.partial_slots);
  return partials;
}

NodeIndex output_node(const Tape& tape, std::size_t position) {
  if (position >= tape.num_outputs()) {
    throw std::out_of_range("output " + std::to_string(position) +
                            " out of range; tape has " +
                            std::to_string(tape.num_outputs()) + " outputs");
  }
  return tape.outputs()[position];
}

}  // namespace

AdjointVector reverse_sweep(const Tape& tape, std::size_t output_position,
                            double output_seed, OpCounter* counter) {
  if (!tape.evaluated()) {
    throw SweepOrderError("reverse_sweep: run forward_sweep first");
  }
  const auto partials = stored_partials(tape);
  return {propagate_adjoints<double>(tape, partials,
                                     output_node(tape, output_position),
                                     output_seed, counter),
          tape.num_inputs()};
}

std::vector<double> gradient(const Tape& tape, std::span<const double> inputs,
                             OpCounter* counter) {
  if (tape.num_outputs() != 1) {
    throw std::invalid_argument(
        "gradient: tape has " + std::to_string(tape.num_outputs()) +
        " outputs; use jacobian_reverse for vector-valued functions");
  }
  const Evaluation<double> ev = evaluate<double>(tape, inputs, counter);
  const auto adjoints = propagate_adjoints<double>(
      tape, ev.partials, tape.outputs()[0], 1.0, counter);
  return {adjoints.begin(),
          adjoints.begin() + static_cast<std::ptrdiff_t>(tape.num_inputs())};
}

Matrix jacobian_reverse(const Tape& tape, std::span<const double> inputs,
                        OpCounter* counter) {
  const Evaluation<double> ev = evaluate<double>(tape, inputs, counter);
  Matrix jac(tape.num_outputs(), tape.num_inputs());
  for (std::size_t j = 0; j < tape.num_outputs(); ++j) {
    const auto adjoints = propagate_adjoints<double>(
        tape, ev.partials, tape.outputs()[j], 1.0, counter);
    for (std::size_t i = 0; i < tape.num_inputs(); ++i) jac(j, i) = adjoints[i];
  }
  return jac;
}

}  // namespace wengert
