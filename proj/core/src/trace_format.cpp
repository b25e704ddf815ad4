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

#include "wengert/trace_format.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "wengert/reverse.hpp"

namespace wengert {
namespace {

struct Row {
  std::string lhs;
  std::string expr;
  std::string value;
};

std::string render_rows(const std::vector<Row>& rows) {
  std::size_t lhs_w = 0;
  std::size_t expr_w = 0;
  for (const Row& r : rows) {
    lhs_w = std::max(lhs_w, r.lhs.size());
    expr_w = std::max(expr_w, r.expr.size());
  }
  std::string out;
  for (const Row& r : rows) {
    out += r.lhs;
    out.append(lhs_w - r.lhs.size(), ' ');
    out += " = ";
    out += r.expr;
    out.append(expr_w - r.expr.size(), ' ');
    out += " = ";
    out += r.value;
    out += '\n';
  }
  return out;
}

std::string v(const Tape& tape, NodeIndex i) {
  return "v_" + std::to_string(tape.display_label(i));
}
std::string vdot(const Tape& tape, NodeIndex i) {
  return "vdot_" + std::to_string(tape.display_label(i));
}
std::string vbar(const Tape& tape, NodeIndex i) {
  return "vbar_" + std::to_string(tape.display_label(i));
}

// Right-hand side of the primal assignment, e.g. "v_-1 * v_0".
std::string primal_expr(const Tape& tape, NodeIndex i,
                        const TraceLabels& labels) {
  const TraceNode& n = tape.node(i);
  const auto p = n.parents();
  switch (n.op) {
    case ElemOp::Input: return labels.input(tape, i);
    case ElemOp::Const: return format_shortest(n.constant);
    case ElemOp::Add:
    case ElemOp::Sub:
    case ElemOp::Mul:
    case ElemOp::Div:
    case ElemOp::Pow:
      return v(tape, p[0]) + " " + std::string(op_symbol(n.op)) + " " +
             v(tape, p[1]);
    case ElemOp::Neg: return "-" + v(tape, p[0]);
    default:
      return std::string(op_name(n.op)) + "(" + v(tape, p[0]) + ")";
  }
}

std::string tangent_expr(const Tape& tape, NodeIndex i,
                         const TraceLabels& labels) {
  const TraceNode& n = tape.node(i);
  const auto p = n.parents();
  const std::string self = v(tape, i);
  switch (n.op) {
    case ElemOp::Input: return "dot(" + labels.input(tape, i) + ")";
    case ElemOp::Const: return "0";
    case ElemOp::Add: return vdot(tape, p[0]) + " + " + vdot(tape, p[1]);
    case ElemOp::Sub: return vdot(tape, p[0]) + " - " + vdot(tape, p[1]);
    case ElemOp::Mul:
      return vdot(tape, p[0]) + " * " + v(tape, p[1]) + " + " + v(tape, p[0]) +
             " * " + vdot(tape, p[1]);
    case ElemOp::Div:
      return "(" + vdot(tape, p[0]) + " - " + self + " * " + vdot(tape, p[1]) +
             ") / " + v(tape, p[1]);
    case ElemOp::Neg: return "-" + vdot(tape, p[0]);
    case ElemOp::Pow:
      return v(tape, p[1]) + " * " + v(tape, p[0]) + " ^ (" + v(tape, p[1]) +
             " - 1) * " + vdot(tape, p[0]) + " + " + self + " * ln(" +
             v(tape, p[0]) + ") * " + vdot(tape, p[1]);
    case ElemOp::Ln: return vdot(tape, p[0]) + " / " + v(tape, p[0]);
    case ElemOp::Exp: return self + " * " + vdot(tape, p[0]);
    case ElemOp::Sin: return "cos(" + v(tape, p[0]) + ") * " + vdot(tape, p[0]);
    case ElemOp::Cos:
      return "-sin(" + v(tape, p[0]) + ") * " + vdot(tape, p[0]);
    case ElemOp::Tan:
      return "(1 + " + self + " ^ 2) * " + vdot(tape, p[0]);
    case ElemOp::Sqrt: return vdot(tape, p[0]) + " / (2 * " + self + ")";
  }
  return "?";
}

// Contribution of node i's adjoint to parent slot s, e.g. "vbar_3 * cos(v_0)".
std::string adjoint_term(const Tape& tape, NodeIndex i, std::size_t s) {
  const TraceNode& n = tape.node(i);
  const auto p = n.parents();
  const std::string bar = vbar(tape, i);
  const std::string self = v(tape, i);
  switch (n.op) {
    case ElemOp::Add: return bar + " * 1";
    case ElemOp::Sub: return s == 0 ? bar + " * 1" : bar + " * (-1)";
    case ElemOp::Mul: return bar + " * " + v(tape, p[s == 0 ? 1 : 0]);
    case ElemOp::Div:
      return s == 0 ? bar + " / " + v(tape, p[1])
                    : bar + " * (-" + self + " / " + v(tape, p[1]) + ")";
    case ElemOp::Neg: return bar + " * (-1)";
    case ElemOp::Pow:
      return s == 0 ? bar + " * " + v(tape, p[1]) + " * " + v(tape, p[0]) +
                          " ^ (" + v(tape, p[1]) + " - 1)"
                    : bar + " * " + self + " * ln(" + v(tape, p[0]) + ")";
    case ElemOp::Ln: return bar + " / " + v(tape, p[0]);
    case ElemOp::Exp: return bar + " * " + self;
    case ElemOp::Sin: return bar + " * cos(" + v(tape, p[0]) + ")";
    case ElemOp::Cos: return bar + " * (-sin(" + v(tape, p[0]) + "))";
    case ElemOp::Tan: return bar + " * (1 + " + self + " ^ 2)";
    case ElemOp::Sqrt: return bar + " / (2 * " + self + ")";
    default: return "?";
  }
}

void require_evaluated(const Tape& tape, const char* who) {
  if (!tape.evaluated()) {
    throw SweepOrderError(std::string(who) + ": run forward_sweep first");
  }
}

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string TraceLabels::input(const Tape& tape, std::size_t i) const {
  if (i < inputs.size()) return inputs[i];
  (void)tape;
  return "x" + std::to_string(i + 1);
}

std::string TraceLabels::output(const Tape& tape, std::size_t j) const {
  if (j < outputs.size()) return outputs[j];
  return tape.num_outputs() == 1 ? std::string("y")
                                 : "y" + std::to_string(j + 1);
}

std::string format_fixed(double value, int precision) {
  std::array<char, 512> buf{};
  std::snprintf(buf.data(), buf.size(), "%.*f", precision, value);
  std::string s(buf.data());
  if (s.front() == '-' &&
      s.find_first_not_of("-0.") == std::string::npos) {
    s.erase(0, 1);
  }
  return s;
}

std::string format_shortest(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc()) return std::to_string(value);
  return std::string(buf.data(), end);
}

std::string export_dot(const Tape& tape, const TraceLabels& labels) {
  std::ostringstream os;
  os << "digraph trace {\n";
  os << "  rankdir=LR;\n";
  std::vector<bool> is_output(tape.size(), false);
  for (NodeIndex o : tape.outputs()) is_output[o] = true;
  for (NodeIndex i = 0; i < tape.size(); ++i) {
    const TraceNode& n = tape.node(i);
    const std::string label = n.op == ElemOp::Input
                                  ? labels.input(tape, i)
                                  : v(tape, i) + " = " +
                                        primal_expr(tape, i, labels);
    os << "  n" << i << " [label=\"" << dot_escape(label) << "\"";
    if (n.op == ElemOp::Input) os << ", shape=box";
    if (is_output[i]) os << ", peripheries=2";
    os << "];\n";
  }
  for (NodeIndex i = 0; i < tape.size(); ++i) {
    for (NodeIndex p : tape.node(i).parents()) {
      os << "  n" << p << " -> n" << i << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

std::string format_primal_trace(const Tape& tape, const TraceLabels& labels,
                                int precision) {
  require_evaluated(tape, "format_primal_trace");
  std::vector<Row> rows;
  for (NodeIndex i = 0; i < tape.size(); ++i) {
    rows.push_back({v(tape, i), primal_expr(tape, i, labels),
                    format_fixed(tape.node(i).value, precision)});
  }
  for (std::size_t j = 0; j < tape.num_outputs(); ++j) {
    const NodeIndex o = tape.outputs()[j];
    rows.push_back({labels.output(tape, j), v(tape, o),
                    format_fixed(tape.node(o).value, precision)});
  }
  return render_rows(rows);
}

std::string format_tangent_trace(const Tape& tape, const SeedVector& seed,
                                 const TraceLabels& labels, int precision) {
  require_evaluated(tape, "format_tangent_trace");
  Evaluation<double> ev;
  for (const TraceNode& n : tape.nodes()) {
    ev.values.push_back(n.value);
    ev.partials.push_back(n.partial_slots);
  }
  const std::vector<double> tangents = tangent_sweep(tape, ev, seed);
  std::vector<Row> rows;
  for (NodeIndex i = 0; i < tape.size(); ++i) {
    rows.push_back({vdot(tape, i), tangent_expr(tape, i, labels),
                    format_fixed(tangents[i], precision)});
  }
  for (std::size_t j = 0; j < tape.num_outputs(); ++j) {
    const NodeIndex o = tape.outputs()[j];
    rows.push_back({"dot(" + labels.output(tape, j) + ")", vdot(tape, o),
                    format_fixed(tangents[o], precision)});
  }
  return render_rows(rows);
}

std::string format_adjoint_trace(const Tape& tape, std::size_t output_position,
                                 const TraceLabels& labels, int precision) {
  require_evaluated(tape, "format_adjoint_trace");
  if (output_position >= tape.num_outputs()) {
    throw std::out_of_range("format_adjoint_trace: output out of range");
  }
  const NodeIndex out = tape.outputs()[output_position];
  std::vector<Row> rows;
  rows.push_back({vbar(tape, out),
                  "bar(" + labels.output(tape, output_position) + ")",
                  format_fixed(1.0, precision)});
  std::vector<std::array<double, kMaxArity>> partials;
  for (const TraceNode& n : tape.nodes()) partials.push_back(n.partial_slots);
  const auto adjoints = propagate_adjoints<double>(
      tape, partials, out, 1.0, nullptr,
      [&](const AdjointStep<double>& step) {
        std::string expr = adjoint_term(tape, step.node, step.slot);
        if (!step.first_write) expr = vbar(tape, step.parent) + " + " + expr;
        rows.push_back({vbar(tape, step.parent), std::move(expr),
                        format_fixed(step.parent_adjoint, precision)});
      });
  for (std::size_t i = 0; i < tape.num_inputs(); ++i) {
    rows.push_back({"bar(" + labels.input(tape, i) + ")", vbar(tape, i),
                    format_fixed(adjoints[i], precision)});
  }
  return render_rows(rows);
}

}  // namespace wengert
