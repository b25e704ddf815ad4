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
#include <variant>

#include "wengert/lang/parser.hpp"
#include "wengert/lang/printer.hpp"

namespace wengert::lang {
namespace {

std::string roundtrip(const std::string& src) { return to_source(parse(src)); }

ParseErrorKind error_kind(const std::string& src) {
  try {
    parse(src);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected a ParseError for: " << src;
  return ParseErrorKind::Lexical;
}

TEST(Parser, Precedence) {
  EXPECT_EQ(roundtrip("1 + 2 * x"), "1 + 2 * x");
  EXPECT_EQ(roundtrip("(1 + 2) * x"), "(1 + 2) * x");
  EXPECT_EQ(roundtrip("a - (b - c)"), "a - (b - c)");
  EXPECT_EQ(roundtrip("a - b - c"), "a - b - c");
  EXPECT_EQ(roundtrip("a / (b * c)"), "a / (b * c)");
}

TEST(Parser, PowerIsRightAssociativeAndBindsTighterThanNegation) {
  const ProgramAst p = parse("-x^2");
  const auto& e = *p.returns[0];
  const auto* neg = std::get_if<UnaryExpr>(&e.node);
  ASSERT_NE(neg, nullptr);
  EXPECT_EQ(neg->op, ElemOp::Neg);
  EXPECT_TRUE(std::holds_alternative<BinaryExpr>(neg->operand->node));
  EXPECT_EQ(roundtrip("a^b^c"), "a^b^c");
  EXPECT_EQ(roundtrip("(a^b)^c"), "(a^b)^c");
  EXPECT_EQ(roundtrip("2^-x"), "2^-x");
}

TEST(Parser, BareExpressionsInferParametersInFirstUseOrder) {
  const ProgramAst p = parse("b * a + sin(c), a");
  EXPECT_TRUE(p.bare);
  EXPECT_EQ(p.params, (std::vector<std::string>{"b", "a", "c"}));
  EXPECT_EQ(p.returns.size(), 2u);
}

TEST(Parser, FullProgram) {
  const std::string src =
      "params x, y  # inputs\n"
      "s = x\n"
      "repeat 2:\n"
      "  if s < y:\n"
      "    s = s * 2\n"
      "  else:\n"
      "    s = s - y\n"
      "  end\n"
      "end\n"
      "return s, s + y\n";
  const ProgramAst p = parse(src);
  EXPECT_FALSE(p.bare);
  EXPECT_EQ(p.params, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(p.body.size(), 2u);
  EXPECT_EQ(to_source(p),
            "params x, y\n"
            "s = x\n"
            "repeat 2:\n"
            "  if s < y:\n"
            "    s = s * 2\n"
            "  else:\n"
            "    s = s - y\n"
            "  end\n"
            "end\n"
            "return s, s + y\n");
}

TEST(Parser, Errors) {
  EXPECT_EQ(error_kind("x $ y"), ParseErrorKind::Lexical);
  EXPECT_EQ(error_kind("1e999"), ParseErrorKind::Lexical);
  EXPECT_EQ(error_kind("ln("), ParseErrorKind::Syntax);
  EXPECT_EQ(error_kind("x +"), ParseErrorKind::Syntax);
  EXPECT_EQ(error_kind("foo(x)"), ParseErrorKind::Syntax);
  EXPECT_EQ(error_kind("sin + 1"), ParseErrorKind::Syntax);
  EXPECT_EQ(error_kind(""), ParseErrorKind::Syntax);
  EXPECT_EQ(error_kind("params x\nreturn y\n"), ParseErrorKind::UseBeforeAssignment);
  EXPECT_EQ(error_kind("params x\nif x > 0:\n  y = 1\nend\nreturn y\n"),
            ParseErrorKind::UseBeforeAssignment);
  EXPECT_EQ(error_kind("params x\nrepeat x:\n  x = x\nend\nreturn x\n"),
            ParseErrorKind::NonConstantLoopBound);
  EXPECT_EQ(error_kind("params x\nrepeat 2.5:\n  y = x\nend\nreturn x\n"),
            ParseErrorKind::NonConstantLoopBound);
  EXPECT_EQ(error_kind("params x\nrepeat 1000001:\n  y = x\nend\nreturn x\n"),
            ParseErrorKind::NonConstantLoopBound);
  EXPECT_EQ(error_kind("params x\nx = 2\nreturn x\n"), ParseErrorKind::AssignToParameter);
  EXPECT_EQ(error_kind(std::string(300, '(') + "x" + std::string(300, ')')),
            ParseErrorKind::TooDeep);
}

TEST(Parser, DefiniteAssignmentThroughBothBranches) {
  EXPECT_NO_THROW(parse("params x\nif x > 0:\n  y = 1\nelse:\n  y = 2\nend\nreturn y\n"));
  EXPECT_NO_THROW(parse("params x\nrepeat 1:\n  y = x\nend\nreturn y\n"));
  EXPECT_EQ(error_kind("params x\nrepeat 0:\n  y = x\nend\nreturn y\n"),
            ParseErrorKind::UseBeforeAssignment);
}

TEST(Parser, ErrorsCarryOffsets) {
  try {
    parse("x + * y");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.span().begin, 4u);
    EXPECT_EQ(std::string(e.what()).rfind("offset 4:", 0), 0u);
  }
}

// Random ASTs survive print -> parse unchanged.
class AstGen {
 public:
  explicit AstGen(std::uint64_t seed) : rng_(seed) {}

  ExprPtr expr(int depth) {
    auto e = std::make_unique<Expr>();
    const int pick = depth <= 0 ? pick_int(0, 1) : pick_int(0, 3);
    if (pick == 0) {
      const double values[] = {0.0, 1.0, 2.5, 1e-3, 12345.0, 0.1, 3e20};
      e->node = NumberLit{values[pick_int(0, 6)]};
    } else if (pick == 1) {
      e->node = VarRef{std::string(1, static_cast<char>('a' + pick_int(0, 3)))};
    } else if (pick == 2) {
      const ElemOp ops[] = {ElemOp::Neg, ElemOp::Ln, ElemOp::Exp, ElemOp::Sin,
                            ElemOp::Cos, ElemOp::Tan, ElemOp::Sqrt};
      e->node = UnaryExpr{ops[pick_int(0, 6)], expr(depth - 1)};
    } else {
      const ElemOp ops[] = {ElemOp::Add, ElemOp::Sub, ElemOp::Mul, ElemOp::Div,
                            ElemOp::Pow};
      e->node = BinaryExpr{ops[pick_int(0, 4)], expr(depth - 1), expr(depth - 1)};
    }
    return e;
  }

 private:
  int pick_int(int lo, int hi) { return std::uniform_int_distribution<>(lo, hi)(rng_); }
  std::mt19937_64 rng_;
};

TEST(ParserProperty, PrintParseRoundTrip) {
  AstGen gen(29);
  for (int trial = 0; trial < 2000; ++trial) {
    const ExprPtr e = gen.expr(6);
    const std::string text = to_source(*e);
    ProgramAst p;
    ASSERT_NO_THROW(p = parse(text)) << text;
    ASSERT_EQ(p.returns.size(), 1u);
    EXPECT_TRUE(structurally_equal(*e, *p.returns[0])) << text;
    EXPECT_EQ(to_source(*p.returns[0]), text);
  }
}

// Arbitrary bytes either parse or raise ParseError; nothing else escapes.
TEST(ParserProperty, FuzzRandomBytes) {
  std::mt19937_64 rng(31);
  const std::string alphabet = "xy12.e+-*/^()=<>,:#\n abcfinrpstuwl$";
  for (int trial = 0; trial < 100000; ++trial) {
    const std::size_t len = std::uniform_int_distribution<std::size_t>(0, 24)(rng);
    std::string s;
    const bool raw = trial % 2 == 0;
    for (std::size_t i = 0; i < len; ++i) {
      if (raw) {
        s += static_cast<char>(std::uniform_int_distribution<int>(0, 255)(rng));
      } else {
        s += alphabet[std::uniform_int_distribution<std::size_t>(0, alphabet.size() - 1)(rng)];
      }
    }
    try {
      parse(s);
    } catch (const ParseError&) {
    }
  }
  SUCCEED();
}

}  // namespace
}  // namespace wengert::lang
