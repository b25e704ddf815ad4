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

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "wengert/finite_diff.hpp"

namespace wengert::baseline {
namespace {

double sin0(std::span<const double> x) { return std::sin(x[0]); }

double central_error(double h) {
  FdConfig c;
  c.step = h;
  return std::abs(fd_gradient(sin0, std::vector{1.0}, c)[0] - std::cos(1.0));
}

TEST(FiniteDiff, AutomaticSteps) {
  const double eps = std::numeric_limits<double>::epsilon();
  EXPECT_DOUBLE_EQ(fd_step({}, 0.5), std::cbrt(eps));
  EXPECT_DOUBLE_EQ(fd_step({}, -4.0), 4.0 * std::cbrt(eps));
  FdConfig fwd;
  fwd.scheme = FdScheme::Forward;
  EXPECT_DOUBLE_EQ(fd_step(fwd, 2.0), 2.0 * std::sqrt(eps));
  FdConfig fixed;
  fixed.step = 1e-3;
  EXPECT_EQ(fd_step(fixed, 100.0), 1e-3);
}

TEST(FiniteDiff, InvalidStepRejected) {
  FdConfig c;
  c.step = -1.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  c.step = 0.0;
  EXPECT_THROW(c.validate(), std::invalid_argument);
  EXPECT_THROW(fd_gradient(sin0, std::vector{1.0}, c), std::invalid_argument);
}

TEST(FiniteDiff, QuadraticCentralIsExactUpToRounding) {
  const auto f = [](std::span<const double> x) { return 3 * x[0] * x[0] + x[1]; };
  const auto g = fd_gradient(f, std::vector{2.0, -1.0});
  EXPECT_NEAR(g[0], 12.0, 1e-8);
  EXPECT_NEAR(g[1], 1.0, 1e-8);
}

TEST(FiniteDiff, TruncationOrder) {
  // Halving h cuts central error ~4x and forward error ~2x while truncation
  // dominates.
  FdConfig c;
  c.step = 1e-2;
  const double e1 = std::abs(fd_gradient(sin0, std::vector{1.0}, c)[0] - std::cos(1.0));
  c.step = 5e-3;
  const double e2 = std::abs(fd_gradient(sin0, std::vector{1.0}, c)[0] - std::cos(1.0));
  EXPECT_NEAR(e1 / e2, 4.0, 0.1);
  c.scheme = FdScheme::Forward;
  c.step = 1e-2;
  const double f1 = std::abs(fd_gradient(sin0, std::vector{1.0}, c)[0] - std::cos(1.0));
  c.step = 5e-3;
  const double f2 = std::abs(fd_gradient(sin0, std::vector{1.0}, c)[0] - std::cos(1.0));
  EXPECT_NEAR(f1 / f2, 2.0, 0.1);
}

TEST(FiniteDiff, TruncationRoundoffVCurve) {
  const double mid = central_error(1e-8);
  EXPECT_LT(10 * mid, central_error(1e-1));
  EXPECT_LT(10 * mid, central_error(1e-15));
}

TEST(FiniteDiff, JacobianShape) {
  const auto f = [](std::span<const double> x) {
    return std::vector<double>{x[0] * x[1], x[0] + x[1], std::exp(x[1])};
  };
  const Matrix j = fd_jacobian(f, std::vector{1.0, 2.0});
  ASSERT_EQ(j.rows(), 3u);
  ASSERT_EQ(j.cols(), 2u);
  EXPECT_NEAR(j(0, 0), 2.0, 1e-8);
  EXPECT_NEAR(j(2, 1), std::exp(2.0), 1e-7);
}

}  // namespace
}  // namespace wengert::baseline
