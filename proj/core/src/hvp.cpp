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

#include "wengert/hvp.hpp"

#include <stdexcept>
#include <string>

#include "wengert/dual.hpp"
#include "wengert/reverse.hpp"

namespace wengert {

GradientHvp gradient_and_hvp(const Tape& tape, const HvpRequest& request,
                             OpCounter* counter) {
  const std::size_t n = tape.num_inputs();
  if (request.point.size() != n || request.direction.size() != n) {
    throw std::invalid_argument(
        "hvp: point and direction must both have " + std::to_string(n) +
        " components (got " + std::to_string(request.point.size()) + " and " +
        std::to_string(request.direction.size()) + ")");
  }
  if (tape.num_outputs() != 1) {
    throw std::invalid_argument("hvp: function must have a single output");
  }
  using D = Dual<double>;
  std::vector<D> inputs;
  inputs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    inputs.emplace_back(request.point[i], request.direction[i]);
  }
  const Evaluation<D> ev = evaluate<D>(tape, inputs, counter);
  const NodeIndex out = tape.outputs()[0];
  const std::vector<D> adjoints =
      propagate_adjoints<D>(tape, ev.partials, out, D(1.0), counter);

  GradientHvp result;
  result.value = ev.values[out].primal;
  result.gradient.reserve(n);
  result.hvp.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    result.gradient.push_back(adjoints[i].primal);
    result.hvp.push_back(adjoints[i].tangent);
  }
  return result;
}

std::vector<double> hvp(const Tape& tape, const HvpRequest& request,
                        OpCounter* counter) {
  return gradient_and_hvp(tape, request, counter).hvp;
}

std::vector<double> hvp(const TapeBuilder& builder, const HvpRequest& request,
                        OpCounter* counter) {
  const Tape tape = builder(request.point);
  return hvp(tape, request, counter);
}

namespace {

void check_dense_dim(std::size_t n) {
  if (n > kMaxDenseHessianDim) {
    throw std::invalid_argument("dense_hessian: n = " + std::to_string(n) +
                                " exceeds limit of " +
                                std::to_string(kMaxDenseHessianDim));
  }
}

}  // namespace

Matrix dense_hessian(const Tape& tape, std::span<const double> inputs) {
  const std::size_t n = tape.num_inputs();
  check_dense_dim(n);
  Matrix h(n, n);
  HvpRequest request{std::vector<double>(inputs.begin(), inputs.end()),
                     std::vector<double>(n, 0.0)};
  for (std::size_t i = 0; i < n; ++i) {
    request.direction.assign(n, 0.0);
    request.direction[i] = 1.0;
    const std::vector<double> column = hvp(tape, request);
    for (std::size_t r = 0; r < n; ++r) h(r, i) = column[r];
  }
  return h;
}

Matrix dense_hessian(const TapeBuilder& builder,
                     std::span<const double> inputs) {
  check_dense_dim(inputs.size());
  return dense_hessian(builder(inputs), inputs);
}

}  // namespace wengert
