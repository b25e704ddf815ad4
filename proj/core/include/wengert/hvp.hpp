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

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "wengert/matrix.hpp"
#include "wengert/tape.hpp"

namespace wengert {

// Records the trace of a function at a given point. Programs with control
// flow produce point-dependent tapes, so second-order routines retrace at
// every evaluation point.
using TapeBuilder = std::function<Tape(std::span<const double>)>;

struct HvpRequest {
  std::vector<double> point;
  std::vector<double> direction;
};

struct GradientHvp {
  double value = 0.0;
  std::vector<double> gradient;
  std::vector<double> hvp;
};

// Forward-over-reverse: evaluates the tape with Dual inputs (x_i, v_i), then
// runs the generic reverse sweep over Dual partials. The primal channel of
// the input adjoints is the gradient, the tangent channel is H * v.
GradientHvp gradient_and_hvp(const Tape& tape, const HvpRequest& request,
                             OpCounter* counter = nullptr);

std::vector<double> hvp(const Tape& tape, const HvpRequest& request,
                        OpCounter* counter = nullptr);
std::vector<double> hvp(const TapeBuilder& builder, const HvpRequest& request,
                        OpCounter* counter = nullptr);

inline constexpr std::size_t kMaxDenseHessianDim = 32;

// Dense Hessian assembled column by column from unit-direction hvps. Meant
// as a test oracle; rejects n > kMaxDenseHessianDim.
Matrix dense_hessian(const Tape& tape, std::span<const double> inputs);
Matrix dense_hessian(const TapeBuilder& builder, std::span<const double> inputs);

}  // namespace wengert
