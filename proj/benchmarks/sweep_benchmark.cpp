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

#include <benchmark/benchmark.h>

#include <cmath>
#include <string>
#include <vector>

#include "wengert/forward.hpp"
#include "wengert/hvp.hpp"
#include "wengert/lang/parser.hpp"
#include "wengert/lang/tracer.hpp"
#include "wengert/reverse.hpp"

namespace {

using namespace wengert;

struct Chain {
  std::vector<double> x;
  Tape tape;
};

// s_1 = x1, s_i = sin(s_{i-1}) + x_i * s_{i-1}
Chain make_chain(std::size_t n) {
  std::string src = "params x1";
  for (std::size_t i = 2; i <= n; ++i) src += ", x" + std::to_string(i);
  src += "\ns = x1\n";
  for (std::size_t i = 2; i <= n; ++i) {
    src += "s = sin(s) + x" + std::to_string(i) + " * s\n";
  }
  src += "return s\n";
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = 0.3 + 0.4 * std::sin(1.0 + i);
  Tape t = lang::trace(lang::parse(src), x);
  return {std::move(x), std::move(t)};
}

void BM_Evaluate(benchmark::State& state) {
  Chain c = make_chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(forward_sweep(c.tape, c.x));
  }
}

void BM_ForwardGradient(benchmark::State& state) {
  const Chain c = make_chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(jacobian_forward(c.tape, c.x));
  state.SetComplexityN(state.range(0));
}

void BM_ReverseGradient(benchmark::State& state) {
  const Chain c = make_chain(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(gradient(c.tape, c.x));
  state.SetComplexityN(state.range(0));
}

void BM_Hvp(benchmark::State& state) {
  const Chain c = make_chain(static_cast<std::size_t>(state.range(0)));
  const std::vector<double> v(c.x.size(), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(hvp(c.tape, {c.x, v}));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(BM_Evaluate)->RangeMultiplier(4)->Range(8, 512);
BENCHMARK(BM_ForwardGradient)->RangeMultiplier(4)->Range(8, 512)->Complexity();
BENCHMARK(BM_ReverseGradient)->RangeMultiplier(4)->Range(8, 512)->Complexity();
BENCHMARK(BM_Hvp)->RangeMultiplier(4)->Range(8, 512)->Complexity();
BENCHMARK_MAIN();
