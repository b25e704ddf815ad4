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

#include <random>

#include "oracles.hpp"
#include "wengert/forward.hpp"
#include "wengert/lang/corpus.hpp"
#include "wengert/lang/parser.hpp"
#include "wengert/lang/tracer.hpp"
#include "wengert/reverse.hpp"

namespace wengert {
namespace {

Tape running_example(const std::vector<double>& x) {
  return lang::trace(
      lang::parse(lang::canned_example("running-example").source), x);
}

TEST(Reverse, RunningExampleGradient) {
  const std::vector<double> x{2.0, 5.0};
  const Tape t = running_example(x);
  const AdjointVector a = reverse_sweep(t, 0);
  const auto g = a.input_adjoints();
  ASSERT_EQ(g.size(), 2u);
  EXPECT_NEAR(g[0], 5.5, 1e-12);
  EXPECT_NEAR(g[1], 1.7163, 1e-4);
  EXPECT_DOUBLE_EQ(g[1], 2.0 - std::cos(5.0));
}

TEST(Reverse, AllAdjointsOfRunningExample) {
  const std::vector<double> x{2.0, 5.0};
  const Tape t = running_example(x);
  const AdjointVector a = reverse_sweep(t, 0);
  // vbar_-1 .. vbar_5
  const double expected[] = {5.5, 2.0 - std::cos(5.0), 1.0, 1.0, -1.0, 1.0, 1.0};
  for (std::size_t i = 0; i < 7; ++i) EXPECT_DOUBLE_EQ(a.adjoints[i], expected[i]);
}

TEST(Reverse, SeedScalesAdjoints) {
  const std::vector<double> x{2.0, 5.0};
  const Tape t = running_example(x);
  const AdjointVector a = reverse_sweep(t, 0, -3.0);
  EXPECT_DOUBLE_EQ(a.input_adjoints()[0], -16.5);
}

TEST(Reverse, FanOutAccumulates) {
  // y = x * x * x has three uses of x.
  const Tape t = lang::trace(lang::parse("x * x * x"), std::vector{1.5});
  EXPECT_DOUBLE_EQ(reverse_sweep(t, 0).adjoints[0], 3 * 1.5 * 1.5);
}

TEST(Reverse, RequiresForwardSweep) {
  Tape t;
  t.mark_output(t.record(ElemOp::Sin, {t.add_input()}));
  EXPECT_THROW(reverse_sweep(t, 0), SweepOrderError);
}

TEST(Reverse, OutputPositionChecked) {
  const std::vector<double> x{2.0, 5.0};
  const Tape t = running_example(x);
  EXPECT_THROW(reverse_sweep(t, 1), std::out_of_range);
}

TEST(Reverse, GradientRejectsVectorFunctions) {
  const auto& ex = lang::canned_example("two-outputs");
  const Tape t = lang::trace(lang::parse(ex.source), ex.point);
  EXPECT_THROW(gradient(t, ex.point), std::invalid_argument);
}

TEST(Reverse, GradientCountsOneAdjointOpPerEdge) {
  const std::vector<double> x{2.0, 5.0};
  const Tape t = running_example(x);
  OpCounter c;
  gradient(t, x, &c);
  EXPECT_EQ(c.primal_ops, 5u);
  EXPECT_EQ(c.adjoint_ops, 8u);
  EXPECT_EQ(c.tangent_ops, 0u);
}

TEST(Reverse, JacobianUsesOneSweepPerOutput) {
  const auto& ex = lang::canned_example("two-outputs");
  const Tape t = lang::trace(lang::parse(ex.source), ex.point);
  OpCounter c;
  const Matrix j = jacobian_reverse(t, ex.point, &c);
  EXPECT_DOUBLE_EQ(j(1, 0), std::cos(ex.point[0]));
  EXPECT_EQ(c.adjoint_ops, 2 * t.edge_count());
}

// <w, J v> computed forward equals <J^T w, v> computed in reverse.
TEST(ReverseProperty, DotProductIdentity) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<> u(-1.0, 1.0);
  for (int trial = 0; trial < 80; ++trial) {
    testing::GeneratorConfig cfg;
    cfg.num_inputs = 3;
    cfg.num_outputs = 2;
    const auto gen = testing::generate_function(rng, cfg);
    const Tape t = lang::trace(lang::parse(gen.source), gen.point);
    const std::vector<double> v{u(rng), u(rng), u(rng)};
    const std::vector<double> w{u(rng), u(rng)};
    const auto jv = forward_directional(t, gen.point, SeedVector{v}).output_tangents;
    std::vector<double> jtw(3, 0.0);
    for (std::size_t o = 0; o < 2; ++o) {
      const AdjointVector a = reverse_sweep(t, o, w[o]);
      for (std::size_t i = 0; i < 3; ++i) jtw[i] += a.adjoints[i];
    }
    const double lhs = w[0] * jv[0] + w[1] * jv[1];
    const double rhs = jtw[0] * v[0] + jtw[1] * v[1] + jtw[2] * v[2];
    EXPECT_LE(testing::rel_err(lhs, rhs), 1e-10) << gen.source;
  }
}

}  // namespace
}  // namespace wengert
