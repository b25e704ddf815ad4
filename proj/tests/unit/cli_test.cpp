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
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace wengert::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string golden(const std::string& name) {
  std::ifstream in(std::string(WENGERT_GOLDEN_DIR) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::string kF = "ln(x1)+x1*x2-sin(x2)";

TEST(Cli, Eval) {
  const Result r = invoke({"eval", "-e", kF, "--at", "x1=2,x2=5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "11.6521\n");
  EXPECT_EQ(invoke({"eval", "-e", "x", "--at", "x=5"}).out, "5.0000\n");
  EXPECT_EQ(invoke({"eval", "-e", kF, "--at", "x1=2,x2=5", "--precision", "2"}).out,
            "11.65\n");
}

TEST(Cli, EvalTraceGolden) {
  EXPECT_EQ(invoke({"eval", "--example", "running-example", "--trace"}).out,
            golden("running_example_eval_trace.txt"));
}

TEST(Cli, MissingBindingIsUsageError) {
  const Result r = invoke({"eval", "-e", kF, "--at", "x1=2"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("unbound parameter"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, BadBindings) {
  EXPECT_EQ(invoke({"eval", "-e", "x", "--at", "y=1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"eval", "-e", "x", "--at", "x=abc"}).code, kExitUsage);
  EXPECT_EQ(invoke({"eval", "-e", "x", "--at", "x=1,x=2"}).code, kExitUsage);
  EXPECT_EQ(invoke({"eval", "-e", "x", "--at", "x"}).code, kExitUsage);
}

TEST(Cli, ParseErrorExitCode) {
  const Result r = invoke({"eval", "-e", "ln(", "--at", "x=1"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("parse error"), std::string::npos);
}

TEST(Cli, DomainErrorExitCode) {
  const Result r = invoke({"eval", "-e", "ln(x)", "--at", "x=-1"});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_NE(r.err.find("ln"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"eval", "--at", "x=1"}).code, kExitUsage);
  EXPECT_EQ(invoke({"eval", "-e", "x", "--example", "quadratic"}).code, kExitUsage);
  EXPECT_EQ(invoke({"grad", "-e", "x", "--at", "x=1", "--mode", "sideways"}).code,
            kExitUsage);
  EXPECT_EQ(invoke({"eval", "-f", "/nonexistent/file.wl"}).code, kExitUsage);
  EXPECT_EQ(invoke({"eval", "--example", "nope"}).code, kExitUsage);
}

TEST(Cli, HelpExitsZero) {
  const Result r = invoke({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("grad"), std::string::npos);
}

TEST(Cli, GradBothModes) {
  const Result rev = invoke({"grad", "-e", kF, "--at", "x1=2,x2=5"});
  EXPECT_EQ(rev.out, "dx1=5.5000 dx2=1.7163\n");
  const Result fwd = invoke({"grad", "-e", kF, "--at", "x1=2,x2=5", "--mode", "forward"});
  EXPECT_EQ(fwd.out, rev.out);
}

TEST(Cli, GradTraceGolden) {
  EXPECT_EQ(invoke({"grad", "--example", "running-example", "--trace"}).out,
            golden("running_example_grad_reverse_trace.txt"));
  EXPECT_EQ(invoke({"grad", "--example", "running-example", "--trace", "--mode",
                    "forward"})
                .out,
            golden("running_example_grad_forward_trace.txt"));
}

TEST(Cli, GradJson) {
  const Result r = invoke({"grad", "--example", "running-example", "--json"});
  EXPECT_EQ(r.out, golden("running_example_grad.json"));
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["gradient"]["x1"].get<double>(), 5.5);
  EXPECT_NEAR(j["gradient"]["x2"].get<double>(), 2.0 - std::cos(5.0), 1e-15);
}

TEST(Cli, GradRejectsVectorFunction) {
  EXPECT_EQ(invoke({"grad", "--example", "two-outputs"}).code, kExitUsage);
}

TEST(Cli, Jacobian) {
  const Result r = invoke({"jacobian", "-e", "x*y, x+y", "--at", "x=2,y=3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "y1: dx=3.0000 dy=2.0000\ny2: dx=1.0000 dy=1.0000\n");
  EXPECT_EQ(invoke({"jacobian", "-e", "x*y, x+y", "--at", "x=2,y=3", "--mode",
                    "forward"})
                .out,
            r.out);
}

TEST(Cli, Hvp) {
  EXPECT_EQ(invoke({"hvp", "-e", "x1^2+x2^2", "--at", "x1=0,x2=0", "--vector", "1,2"}).out,
            "Hv_x1=2.0000 Hv_x2=4.0000\n");
  EXPECT_EQ(invoke({"hvp", "-e", kF, "--at", "x1=2,x2=5", "--vector", "1,0"}).out,
            "Hv_x1=-0.2500 Hv_x2=1.0000\n");
  const Result j = invoke({"hvp", "-e", kF, "--at", "x1=2,x2=5", "--vector", "1,0", "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  EXPECT_NEAR(doc["hvp"]["x1"].get<double>(), -0.25, 1e-9);
  EXPECT_NEAR(doc["hvp"]["x2"].get<double>(), 1.0, 1e-9);
}

TEST(Cli, HvpDimensionMismatch) {
  EXPECT_EQ(invoke({"hvp", "-e", kF, "--at", "x1=2,x2=5", "--vector", "1"}).code,
            kExitUsage);
  EXPECT_EQ(invoke({"hvp", "-e", kF, "--at", "x1=2,x2=5"}).code, kExitUsage);
}

TEST(Cli, Check) {
  const Result ok = invoke({"check", "-e", kF, "--at", "x1=2,x2=5", "--json"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_LT(nlohmann::json::parse(ok.out)["max_rel_err"].get<double>(), 1e-6);

  const Result bad = invoke({"check", "-e", kF, "--at", "x1=2,x2=5", "--fd-step", "1e-15"});
  EXPECT_EQ(bad.code, kExitCheckFailed);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);

  const Result flat = invoke({"check", "-e", "0*x + 4", "--at", "x=1", "--json"});
  EXPECT_EQ(flat.code, 0);
  const auto doc = nlohmann::json::parse(flat.out);
  EXPECT_EQ(doc["ad"]["x"].get<double>(), 0.0);
  EXPECT_EQ(doc["fd"]["x"].get<double>(), 0.0);

  EXPECT_EQ(invoke({"check", "-e", kF, "--at", "x1=2,x2=5", "--fd-step", "-1"}).code,
            kExitUsage);
}

TEST(Cli, CheckDomainErrorAtProbePoint) {
  // sqrt is undefined just left of 0.
  EXPECT_EQ(invoke({"check", "-e", "sqrt(x)", "--at", "x=1e-9"}).code, kExitDomain);
}

TEST(Cli, Graph) {
  const Result r = invoke({"graph", "--example", "running-example"});
  EXPECT_EQ(r.out, golden("running_example.dot"));
  const Result bare = invoke({"graph", "-e", kF});
  EXPECT_EQ(bare.code, 0);
  std::size_t nodes = 0;
  for (std::size_t p = bare.out.find("[label"); p != std::string::npos;
       p = bare.out.find("[label", p + 1)) {
    ++nodes;
  }
  EXPECT_EQ(nodes, 7u);
}

TEST(Cli, Swell) {
  const Result r = invoke({"swell", "--depth", "10"});
  EXPECT_EQ(r.out, golden("swell_depth10.txt"));
  const auto doc = nlohmann::json::parse(invoke({"swell", "--depth", "8", "--json"}).out);
  std::size_t prev = 0;
  for (const auto& row : doc["rows"]) {
    EXPECT_GE(row["deriv_size"].get<std::size_t>(), prev);
    prev = row["deriv_size"].get<std::size_t>();
    EXPECT_EQ(row["tape_nodes"].get<std::size_t>(), 4 * row["k"].get<std::size_t>());
  }
}

TEST(Cli, OptGradientDescent) {
  const Result r = invoke({"opt", "-e", "(x-3)^2", "--w0", "x=0", "--method", "gd",
                           "--eta", "0.1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("iter,f,grad_inf_norm,x\n", 0), 0u);
  const std::string last = r.out.substr(r.out.rfind('\n', r.out.size() - 2) + 1);
  const double x = std::stod(last.substr(last.rfind(',') + 1));
  EXPECT_LT(std::abs(x - 3.0), 1e-6);
  EXPECT_NE(r.err.find("converged"), std::string::npos);
}

TEST(Cli, OptNewtonCgJson) {
  const Result r = invoke({"opt", "--example", "rosenbrock", "--method", "newton-cg",
                           "--json", "--tol", "1e-9"});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["termination"], "converged");
  EXPECT_NEAR(doc["iterates"].back()["w"]["x"].get<double>(), 1.0, 1e-6);
}

TEST(Cli, OptDomainError) {
  const Result r = invoke({"opt", "-e", "ln(x)", "--w0", "x=0.5", "--eta", "1"});
  EXPECT_EQ(r.code, kExitDomain);
  EXPECT_NE(r.err.find("domain-error"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::vector<std::string>> cases = {
      {"grad", "--example", "softplus-norm", "--json"},
      {"opt", "--example", "logistic-loss", "--method", "newton-cg"},
      {"graph", "--example", "damped-iteration"},
      {"check", "--example", "trig-mix"},
  };
  for (const auto& args : cases) {
    EXPECT_EQ(invoke(args).out, invoke(args).out) << args[0];
  }
}

TEST(Cli, ProgramFromFile) {
  const std::string path = ::testing::TempDir() + "/cli_prog.wl";
  {
    std::ofstream f(path);
    f << "params x\n# square it\ny = x * x\nreturn y\n";
  }
  EXPECT_EQ(invoke({"grad", "-f", path, "--at", "x=3"}).out, "dx=6.0000\n");
}

}  // namespace
}  // namespace wengert::cli
