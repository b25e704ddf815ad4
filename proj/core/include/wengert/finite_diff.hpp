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

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "wengert/matrix.hpp"

namespace wengert::baseline {

enum class FdScheme { Forward, Central };

struct FdConfig {
  // nullopt selects the automatic step: cbrt(eps) * max(1, |x_i|) for the
  // central scheme, sqrt(eps) * max(1, |x_i|) for the forward scheme.
  std::optional<double> step;
  FdScheme scheme = FdScheme::Central;

  void validate() const;
};

using ScalarFunction = std::function<double(std::span<const double>)>;
using VectorFunction = std::function<std::vector<double>(std::span<const double>)>;

double fd_step(const FdConfig& config, double x);

// Forward: (f(x + h e_i) - f(x)) / h. Central: (f(x + h e_i) - f(x - h e_i)) / 2h.
// Exceptions from f (e.g. a DomainError at a probe point) propagate.
std::vector<double> fd_gradient(const ScalarFunction& f,
                                std::span<const double> inputs,
                                const FdConfig& config = {});

Matrix fd_jacobian(const VectorFunction& f, std::span<const double> inputs,
                   const FdConfig& config = {});

}  // namespace wengert::baseline
