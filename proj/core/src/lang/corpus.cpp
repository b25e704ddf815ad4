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

#include "wengert/lang/corpus.hpp"

#include <stdexcept>

namespace wengert::lang {

const std::vector<CannedExample>& canned_examples() {
  static const std::vector<CannedExample> examples = {
      {"running-example",
       "params x1, x2\n"
       "v1 = ln(x1)\n"
       "v2 = x1 * x2\n"
       "v3 = sin(x2)\n"
       "v4 = v1 + v2\n"
       "v5 = v4 - v3\n"
       "return v5\n",
       {2.0, 5.0}},
      {"quadratic", "x1^2 + x2^2", {1.5, -0.5}},
      {"rosenbrock", "(1 - x)^2 + 100*(y - x^2)^2", {-1.2, 1.0}},
      {"cubic-poly", "3*x1^3 - 2*x1*x2 + x2*x3^2 - 7", {1.0, 2.0, 3.0}},
      {"product-chain", "sin(x)*sin(2*x)*sin(3*x)*sin(4*x)", {0.3}},
      {"softplus-norm", "ln(1 + exp(a*b)) + sqrt(a^2 + b^2) / (1 + c^2)",
       {0.7, -1.3, 0.4}},
      {"trig-mix", "tan(0.5*u) * cos(v) - exp(-u*v) + u/v", {0.8, 1.7}},
      {"two-outputs", "x1*x2, sin(x1) + x2^3", {0.6, 1.1}},
      {"abs-branch",
       "params x\n"
       "if x < 0:\n"
       "  y = -x\n"
       "else:\n"
       "  y = x\n"
       "end\n"
       "return y\n",
       {3.0}},
      {"power-loop",
       "params x\n"
       "s = 1\n"
       "repeat 4:\n"
       "  s = s * x\n"
       "end\n"
       "return s\n",
       {2.0}},
      {"damped-iteration",
       "params x, y\n"
       "s = x\n"
       "repeat 3:\n"
       "  if s > 1:\n"
       "    s = s / 2 + y\n"
       "  else:\n"
       "    s = s * s + y\n"
       "  end\n"
       "end\n"
       "return s\n",
       {1.4, 0.3}},
      {"logistic-loss",
       "params w1, w2, b\n"
       "z1 = w1*0.5 - w2*1.5 + b\n"
       "z2 = -w1*2 + w2*0.25 + b\n"
       "l1 = ln(1 + exp(-z1))\n"
       "l2 = ln(1 + exp(z2))\n"
       "return l1 + l2 + 0.01*(w1^2 + w2^2)\n",
       {0.2, -0.4, 0.1}},
  };
  return examples;
}

const CannedExample& canned_example(const std::string& name) {
  for (const CannedExample& e : canned_examples()) {
    if (e.name == name) return e;
  }
  throw std::out_of_range("no canned example named '" + name + "'");
}

}  // namespace wengert::lang
