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

#include "wengert/forward.hpp"

#include <stdexcept>
#include <string>

namespace wengert {
namespace {

void check_seed(const Tape& tape, const SeedVector& seed) {
  if (seed.components.size() != tape.num_inputs()) {
    throw std::invalid_argument("seed has " +
                                std::to_string(seed.components.size()) +
                                " components, tape has " +
                                std::to_string(tape.num_inputs()) + " inputs");
  }
}

}  // namespace

SeedVector SeedVector::unit(std::size_t n, std::size_t i) {
  SeedVector s{std::vector<double>(n, 0.0)};
  s.components.at(i) = 1.0;
  return s;
}

std::vector<double> tangent_sweep(const Tape& tape,
                                  const Evaluation<double>& primal,
                                  const SeedVector& seed, OpCounter* counter) {
  check_seed(tape, seed);
  std::vector<double> tangents(tape.size(), 0.0);
  for (NodeIndex i = 0; i < tape.size(); ++i) {
    const TraceNode& node = tape.node(i);
    if (node.op == ElemOp::Input) {
      tangents[i] = seed.components[i];
      continue;
    }
    const auto parents = node.parents();
    double t = 0.0;
    for (std::size_t s = 0; s < parents.size(); ++s) {
      t += primal.partials[i][s] * tangents[parents[s]];
    }
    tangents[i] = t;
    if (counter != nullptr) counter->tangent_ops += parents.size();
  }
  return tangents;
}

DirectionalResult forward_directional(const Tape& tape,
                                      std::span<const double> inputs,
                                      const SeedVector& seed,
                                      OpCounter* counter) {
  check_seed(tape, seed);
  const Evaluation<double> primal = evaluate<double>(tape, inputs, counter);
  const std::vector<double> tangents =
      tangent_sweep(tape, primal, seed, counter);
  DirectionalResult result{primal.outputs(tape), {}};
  for (NodeIndex o : tape.outputs()) result.output_tangents.push_back(tangents[o]);
  return result;
}

DirectionalResult forward_directional_dual(const Tape& tape,
                                           std::span<const double> inputs,
                                           const SeedVector& seed,
                                           OpCounter* counter) {
  check_seed(tape, seed);
  if (inputs.size() != tape.num_inputs()) {
    throw std::invalid_argument("forward_directional_dual: input size mismatch");
  }
  std::vector<Dual<double>> duals;
  duals.reserve(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    duals.emplace_back(inputs[i], seed.components[i]);
  }
  const Evaluation<Dual<double>> ev =
      evaluate<Dual<double>>(tape, duals, counter);
  DirectionalResult result;
  for (NodeIndex o : tape.outputs()) {
    result.outputs.push_back(ev.values[o].primal);
    result.output_tangents.push_back(ev.values[o].tangent);
  }
  return result;
}

Matrix jacobian_forward(const Tape& tape, std::span<const double> inputs,
                        OpCounter* counter) {
  const Evaluation<double> primal = evaluate<double>(tape, inputs, counter);
  const std::size_t n = tape.num_inputs();
  Matrix jac(tape.num_outputs(), n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<double> tangents =
        tangent_sweep(tape, primal, SeedVector::unit(n, i), counter);
    for (std::size_t j = 0; j < tape.num_outputs(); ++j) {
      jac(j, i) = tangents[tape.outputs()[j]];
    }
  }
  return jac;
}

}  // namespace wengert
