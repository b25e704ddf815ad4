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

// Direction in input space. A unit vector e_i selects d/dx_i; an arbitrary
// vector gives a Jacobian-vector product.
struct SeedVector {
  std::vector<double> components;

  static SeedVector unit(std::size_t n, std::size_t i);
};

struct DirectionalResult {
  std::vector<double> outputs;
  std::vector<double> output_tangents;
};

// Tangent sweep over an evaluated set of partials: vdot_i = sum over parents
// of partial * vdot_parent. Returns tangents for every node.
std::vector<double> tangent_sweep(const Tape& tape,
                                  const Evaluation<double>& primal,
                                  const SeedVector& seed,
                                  OpCounter* counter = nullptr);

// One forward pass: outputs and J * seed, via the stored-partials tangent
// sweep.
DirectionalResult forward_directional(const Tape& tape,
                                      std::span<const double> inputs,
                                      const SeedVector& seed,
                                      OpCounter* counter = nullptr);

// Same quantity computed by evaluating the tape with Dual scalars.
DirectionalResult forward_directional_dual(const Tape& tape,
                                           std::span<const double> inputs,
                                           const SeedVector& seed,
                                           OpCounter* counter = nullptr);

// m x n Jacobian from exactly n tangent sweeps, one per unit seed.
Matrix jacobian_forward(const Tape& tape, std::span<const double> inputs,
                        OpCounter* counter = nullptr);

}  // namespace wengert
