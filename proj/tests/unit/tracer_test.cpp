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
#include "wengert/lang/corpus.hpp"
#include "wengert/lang/parser.hpp"
#include "wengert/lang/tracer.hpp"
#include "wengert/reverse.hpp"

namespace wengert::lang {
namespace {

std::vector<ElemOp> ops_of(const Tape& t) {
  std::vector<ElemOp> ops;
  for (const TraceNode& n : t.nodes()) ops.push_back(n.op);
  return ops;
}

TEST(Tracer, BranchFollowsTakenPath) {
  const ProgramAst p = parse(canned_example("abs-branch").source);
  const Tape pos = trace(p, std::vector{3.0});
  const Tape neg = trace(p, std::vector{-3.0});
  EXPECT_EQ(gradient(pos, std::vector{3.0})[0], 1.0);
  EXPECT_EQ(gradient(neg, std::vector{-3.0})[0], -1.0);
  EXPECT_NE(ops_of(pos), ops_of(neg));
  EXPECT_EQ(pos.size(), 1u);
  EXPECT_EQ(neg.size(), 2u);
}

std::string power_loop(int n) {
  return "params x\ns = x\nrepeat " + std::to_string(n) +
         ":\n  s = s * x + 1\nend\nreturn s\n";
}

TEST(Tracer, RepeatUnrollsAffinely) {
  for (int n = 0; n <= 20; ++n) {
    const Tape t = trace(parse(power_loop(n)), std::vector{0.5});
    // input, then per iteration a Mul, a Const and an Add
    EXPECT_EQ(t.size(), 1u + 3u * n) << n;
  }
}

TEST(Tracer, PassiveLiteralsAreFolded) {
  const Tape t = trace(parse("x * (2 * 3 + sin(0))"), std::vector{1.0});
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t.node(1).op, ElemOp::Const);
  EXPECT_EQ(t.node(1).constant, 6.0);
}

TEST(Tracer, ConstantProgramStillHasAnOutput) {
  const Tape t = trace(parse("2 + 3"), std::vector<double>{});
  EXPECT_EQ(t.num_outputs(), 1u);
  EXPECT_EQ(t.node(t.outputs()[0]).value, 5.0);
}

TEST(Tracer, InputCountChecked) {
  EXPECT_THROW(trace(parse("x + y"), std::vector{1.0}), std::invalid_argument);
}

TEST(Tracer, DomainErrorInPassiveArithmetic) {
  EXPECT_THROW(trace(parse("x + ln(0 - 1)"), std::vector{1.0}), DomainError);
}

TEST(Tracer, DomainErrorInActiveArithmetic) {
  EXPECT_THROW(trace(parse("ln(x)"), std::vector{-1.0}), DomainError);
}

TEST(Tracer, BuilderRetracesPerPoint) {
  const TapeBuilder b = make_tape_builder(parse(canned_example("abs-branch").source));
  EXPECT_EQ(b(std::vector{2.0}).size(), 1u);
  EXPECT_EQ(b(std::vector{-2.0}).size(), 2u);
}

TEST(Tracer, CorpusAgreesWithInterpreter) {
  for (const CannedExample& ex : canned_examples()) {
    const ProgramAst p = parse(ex.source);
    const Tape t = trace(p, ex.point);
    const std::vector<double> want = testing::interpret(p, ex.point);
    ASSERT_EQ(t.num_outputs(), want.size()) << ex.name;
    for (std::size_t j = 0; j < want.size(); ++j) {
      EXPECT_DOUBLE_EQ(t.node(t.outputs()[j]).value, want[j]) << ex.name;
    }
  }
}

TEST(TracerProperty, RandomExpressionsAgreeWithInterpreter) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    testing::GeneratorConfig cfg;
    cfg.num_outputs = 2;
    const auto gen = testing::generate_function(rng, cfg);
    const ProgramAst p = parse(gen.source);
    const Tape t = trace(p, gen.point);
    const auto want = testing::interpret(p, gen.point);
    for (std::size_t j = 0; j < want.size(); ++j) {
      EXPECT_LE(testing::rel_err(want[j], t.node(t.outputs()[j]).value), 1e-12)
          << gen.source;
    }
  }
}

}  // namespace
}  // namespace wengert::lang
