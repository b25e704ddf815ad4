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
#include <random>
#include <vector>

#include "wengert/elem_op.hpp"

namespace wengert {
namespace {

constexpr ElemOp kWorkingOps[] = {
    ElemOp::Add, ElemOp::Sub, ElemOp::Mul, ElemOp::Div, ElemOp::Neg, ElemOp::Pow,
    ElemOp::Ln,  ElemOp::Exp, ElemOp::Sin, ElemOp::Cos, ElemOp::Tan, ElemOp::Sqrt};

TEST(ElemOp, ArityTable) {
  EXPECT_EQ(arity(ElemOp::Const), 0u);
  EXPECT_EQ(arity(ElemOp::Input), 0u);
  for (ElemOp op : {ElemOp::Neg, ElemOp::Ln, ElemOp::Exp, ElemOp::Sin,
                    ElemOp::Cos, ElemOp::Tan, ElemOp::Sqrt}) {
    EXPECT_EQ(arity(op), 1u) << op_name(op);
  }
  for (ElemOp op : {ElemOp::Add, ElemOp::Sub, ElemOp::Mul, ElemOp::Div,
                    ElemOp::Pow}) {
    EXPECT_EQ(arity(op), 2u) << op_name(op);
  }
}

TEST(ElemOp, MulPartialsSwapOperands) {
  const std::vector<double> p = local_partials(ElemOp::Mul, std::vector{2.0, 5.0}, 10.0);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p[0], 5.0);
  EXPECT_EQ(p[1], 2.0);
}

TEST(ElemOp, SinPartialIsCos) {
  const auto p = local_partials(ElemOp::Sin, std::vector{5.0}, std::sin(5.0));
  ASSERT_EQ(p.size(), 1u);
  EXPECT_NEAR(p[0], 0.2837, 1e-4);
  EXPECT_EQ(p[0], std::cos(5.0));
}

TEST(ElemOp, AddAndSubPartials) {
  EXPECT_EQ(local_partials(ElemOp::Add, std::vector{3.0, -4.0}, -1.0),
            (std::vector{1.0, 1.0}));
  EXPECT_EQ(local_partials(ElemOp::Sub, std::vector{3.0, -4.0}, 7.0),
            (std::vector{1.0, -1.0}));
}

TEST(ElemOp, LeafOpsHaveNoPartials) {
  EXPECT_TRUE(local_partials(ElemOp::Const, {}, 3.0).empty());
  EXPECT_TRUE(local_partials(ElemOp::Input, {}, 3.0).empty());
}

TEST(ElemOp, ArityMismatchRejected) {
  EXPECT_THROW(local_partials(ElemOp::Mul, std::vector{1.0}, 1.0),
               std::invalid_argument);
  EXPECT_THROW(local_partials(ElemOp::Sin, std::vector{1.0, 2.0}, 1.0),
               std::invalid_argument);
}

TEST(ElemOp, DomainErrors) {
  EXPECT_THROW(check_domain(ElemOp::Ln, 0.0, 0.0), DomainError);
  EXPECT_THROW(check_domain(ElemOp::Ln, -1.0, 0.0), DomainError);
  EXPECT_THROW(check_domain(ElemOp::Sqrt, -1.0, 0.0), DomainError);
  EXPECT_THROW(check_domain(ElemOp::Sqrt, 0.0, 0.0), DomainError);
  EXPECT_THROW(check_domain(ElemOp::Div, 1.0, 0.0), DomainError);
  EXPECT_THROW(check_domain(ElemOp::Pow, 0.0, -2.0), DomainError);
  EXPECT_THROW(check_domain(ElemOp::Pow, -2.0, 0.5), DomainError);
  EXPECT_NO_THROW(check_domain(ElemOp::Pow, -2.0, 3.0));
  EXPECT_NO_THROW(check_domain(ElemOp::Pow, 0.0, 2.0));
  EXPECT_NO_THROW(check_domain(ElemOp::Ln, 1e-300, 0.0));
}

TEST(ElemOp, DomainErrorCarriesNodeIndex) {
  try {
    check_domain(ElemOp::Ln, -1.0, 0.0);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_EQ(e.op(), ElemOp::Ln);
    EXPECT_FALSE(e.node().has_value());
    const DomainError located = e.at_node(4);
    ASSERT_TRUE(located.node().has_value());
    EXPECT_EQ(*located.node(), 4u);
    EXPECT_NE(std::string(located.what()).find("node 4"), std::string::npos);
  }
}

// Random point inside each op's domain, away from singularities.
std::vector<double> generic_point(ElemOp op, std::mt19937_64& rng) {
  std::uniform_real_distribution<> wide(-3.0, 3.0);
  std::uniform_real_distribution<> positive(0.2, 3.0);
  switch (op) {
    case ElemOp::Ln:
    case ElemOp::Sqrt: return {positive(rng)};
    case ElemOp::Tan: return {std::uniform_real_distribution<>(-1.2, 1.2)(rng)};
    case ElemOp::Div: {
      double b = wide(rng);
      if (std::abs(b) < 0.2) b = 0.5;
      return {wide(rng), b};
    }
    case ElemOp::Pow: return {positive(rng), wide(rng)};
    default:
      if (arity(op) == 1) return {wide(rng)};
      return {wide(rng), wide(rng)};
  }
}

double apply_at(ElemOp op, const std::vector<double>& x) {
  return apply_op<double>(op, x[0], x.size() > 1 ? x[1] : 0.0);
}

// Each op's stored partial matches a central difference of the op itself.
TEST(ElemOpProperty, PartialsMatchCentralDifferences) {
  std::mt19937_64 rng(20261016);
  for (ElemOp op : kWorkingOps) {
    for (int trial = 0; trial < 200; ++trial) {
      const std::vector<double> x = generic_point(op, rng);
      const double value = apply_at(op, x);
      const std::vector<double> p = local_partials(op, x, value);
      for (std::size_t s = 0; s < x.size(); ++s) {
        const double h = 1e-5 * std::max(1.0, std::abs(x[s]));
        std::vector<double> xp = x, xm = x;
        xp[s] += h;
        xm[s] -= h;
        const double fd = (apply_at(op, xp) - apply_at(op, xm)) / (2 * h);
        const double rel = std::abs(p[s] - fd) / std::max(1.0, std::abs(p[s]));
        EXPECT_LT(rel, 1e-7) << op_name(op) << " slot " << s << " at x0=" << x[0];
      }
    }
  }
}

}  // namespace
}  // namespace wengert
