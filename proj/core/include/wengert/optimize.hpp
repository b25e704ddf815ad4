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
#include <string>
#include <string_view>
#include <vector>

#include "wengert/hvp.hpp"
#include "wengert/tape.hpp"

namespace wengert {

enum class Termination { Converged, MaxIters, DomainError, LineSearchFailed };

std::string_view termination_name(Termination t) noexcept;

struct Iterate {
  std::vector<double> w;
  double f = 0.0;
  double grad_inf_norm = 0.0;
};

struct OptTrajectory {
  std::vector<Iterate> iterates;
  Termination termination = Termination::MaxIters;
  std::string message;
  std::size_t gradient_evals = 0;
  std::size_t hvp_evals = 0;
  // Sweep steps spent in gradient and hvp evaluations.
  OpCounter ops;

  const Iterate& final() const { return iterates.back(); }
};

// w <- w - step * grad f(w), stopping once the gradient's infinity norm
// drops below grad_tol or after max_iters updates.
struct GdConfig {
  double step = 0.1;
  std::size_t max_iters = 1000;
  double grad_tol = 1e-8;

  void validate() const;
};

struct NewtonCgConfig {
  std::size_t max_iters = 100;
  double grad_tol = 1e-8;
  // Inner conjugate-gradient stop: ||r|| <= cg_rel_tol * ||grad f||.
  double cg_rel_tol = 1e-8;
  // Armijo sufficient-decrease constant and halving budget for the step.
  double armijo_c = 1e-4;
  std::size_t max_backtracks = 60;

  void validate() const;
};

// Both optimizers retrace `f` at every iterate, so programs with branches
// are differentiated along the path taken at that point. A domain error
// anywhere ends the run with Termination::DomainError; the trajectory keeps
// the iterates reached so far.
OptTrajectory gradient_descent(const TapeBuilder& f, std::vector<double> w0,
                               const GdConfig& config);

// Truncated Newton: each outer step solves H d = -g by conjugate gradients
// using only Hessian-vector products, then backtracks from the full step.
OptTrajectory newton_cg(const TapeBuilder& f, std::vector<double> w0,
                        const NewtonCgConfig& config);

// CSV with header `iter,f,grad_inf_norm,<names...>`; values use the
// shortest round-trip representation.
std::string trajectory_csv(const OptTrajectory& trajectory,
                           const std::vector<std::string>& names);

}  // namespace wengert
