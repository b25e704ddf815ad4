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

#include <string>
#include <vector>

namespace wengert::lang {

struct CannedExample {
  std::string name;
  std::string source;
  std::vector<double> point;  // a generic point inside the domain
};

// Built-in example programs, in a fixed order. "running-example" computes
// ln(x1) + x1*x2 - sin(x2), evaluated at (2, 5).
const std::vector<CannedExample>& canned_examples();

const CannedExample& canned_example(const std::string& name);

}  // namespace wengert::lang
