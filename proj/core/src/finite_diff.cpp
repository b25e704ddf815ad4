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

#include "wengert/finite_diff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wengert::baseline {

void FdConfig::validate() const {
  if (step && !(*step > 0.0 && std::isfinite(*step))) {
    throw std::invalid_argument("finite-difference step must be positive");
  }
}

double fd_step(const FdConfig& config, double x) {
  config.validate();
  if (config.step) return *config.step;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double scale = std::max(1.0, std::abs(x));
  return config.scheme == FdScheme::Central ? std::cbrt(eps) * scale
                                            : std::sqrt(eps) * scale;
}

std::vector<double> fd_gradient(const ScalarFunction& f,
                                std::span<const double> inputs,
                                const FdConfig& config) {
  const VectorFunction wrapped = [&f](std::span<const double> x) {
    return std::vector<double>{f(x)};
  };
  return fd_jacobian(wrapped, inputs, config).row(0);
}

Matrix fd_jacobian(const VectorFunction& f, std::span<const double> inputs,
                   const FdConfig& config) {
  config.validate();
  std::vector<double> x(inputs.begin(), inputs.end());
  std::vector<double> base;
  if (config.scheme == FdScheme::Forward) base = f(x);

  Matrix jac;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double xi = x[i];
    const double h = fd_step(config, xi);
    x[i] = xi + h;
    const std::vector<double> plus = f(x);
    std::vector<double> minus;
    if (config.scheme == FdScheme::Central) {
      x[i] = xi - h;
      minus = f(x);
    }
    x[i] = xi;
    if (i == 0) jac = Matrix(plus.size(), x.size());
    for (std::size_t j = 0; j < plus.size(); ++j) {
      jac(j, i) = config.scheme == FdScheme::Central
                      ? (plus[j] - minus[j]) / (2.0 * h)
                      : (plus[j] - base[j]) / h;
    }
  }
  if (x.empty()) jac = Matrix(f(x).size(), 0);
  return jac;
}

}  // namespace wengert::baseline
