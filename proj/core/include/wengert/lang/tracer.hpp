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

#include <span>
#include <stdexcept>
#include <string>

#include "wengert/hvp.hpp"
#include "wengert/lang/ast.hpp"
#include "wengert/tape.hpp"
#include "wengert/trace_format.hpp"

namespace wengert::lang {

class TraceError : public std::runtime_error {
 public:
  TraceError(SourceSpan span, const std::string& message)
      : std::runtime_error(message), span_(span) {}
  SourceSpan span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

// Executes the program on numeric inputs and records every elementary
// operation on a fresh tape. An if-statement evaluates its comparison and
// traces only the branch taken; a repeat-loop appends its body `count`
// times. Arithmetic on literals alone is folded and never recorded; a
// literal that meets a traced value becomes a Const node.
//
// The returned tape is straight-line and already forward-swept at `inputs`.
// Its derivatives are those of the path taken at this point only.
Tape trace(const ProgramAst& program, std::span<const double> inputs,
           OpCounter* counter = nullptr);

// Closure that retraces `program` at each requested point.
TapeBuilder make_tape_builder(const ProgramAst& program);

TraceLabels labels_for(const ProgramAst& program);

}  // namespace wengert::lang
