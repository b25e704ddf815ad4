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

#include "wengert/lang/ast.hpp"

namespace wengert::lang {

// Source text that parses back to a structurally identical AST. Parentheses
// are emitted only where precedence or associativity requires them.
std::string to_source(const Expr& expr);
std::string to_source(const ProgramAst& program);

}  // namespace wengert::lang
