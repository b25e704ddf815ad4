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
#include <string>
#include <vector>

#include "wengert/forward.hpp"
#include "wengert/tape.hpp"

namespace wengert {

// Display names for a tape's inputs and outputs. Empty vectors fall back to
// x1..xn and y (or y1..ym).
struct TraceLabels {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  std::string input(const Tape& tape, std::size_t i) const;
  std::string output(const Tape& tape, std::size_t j) const;
};

// Fixed-point rendering that never prints a negative zero.
std::string format_fixed(double value, int precision);

// Shortest decimal string that reads back to the same double.
std::string format_shortest(double value);

// Graphviz rendering of the computational graph: one node per trace entry,
// one edge per parent link, all in index order.
std::string export_dot(const Tape& tape, const TraceLabels& labels = {});

// Listing of the forward evaluation trace. Requires an evaluated tape.
std::string format_primal_trace(const Tape& tape, const TraceLabels& labels = {},
                                int precision = 4);

// Listing of the forward derivative trace for one seed direction.
std::string format_tangent_trace(const Tape& tape, const SeedVector& seed,
                                 const TraceLabels& labels = {},
                                 int precision = 4);

// Listing of the reverse adjoint trace for one output, one line per
// accumulation step in execution order. Later contributions to an already
// written adjoint show up as "vbar_k = vbar_k + ...".
std::string format_adjoint_trace(const Tape& tape, std::size_t output_position,
                                 const TraceLabels& labels = {},
                                 int precision = 4);

}  // namespace wengert
