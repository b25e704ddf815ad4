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

#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "wengert/finite_diff.hpp"
#include "wengert/forward.hpp"
#include "wengert/hvp.hpp"
#include "wengert/lang/corpus.hpp"
#include "wengert/lang/parser.hpp"
#include "wengert/lang/tracer.hpp"
#include "wengert/optimize.hpp"
#include "wengert/reverse.hpp"
#include "wengert/symbolic.hpp"
#include "wengert/trace_format.hpp"

namespace wengert::cli {
namespace {

using json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string expr;
  std::string file;
  std::string example;
  std::string at;
  bool json = false;
  bool trace = false;
  int precision = 4;
  std::string mode = "reverse";
  std::string vector;
  std::optional<double> fd_step;
  std::string scheme = "central";
  double check_tol = 1e-4;
  int depth = 8;
  std::string simplify = "minimal";
  std::string w0;
  std::string method = "gd";
  double eta = 0.1;
  std::size_t max_iters = 1000;
  double opt_tol = 1e-8;
};

struct Function {
  lang::ProgramAst program;
  std::optional<std::vector<double>> default_point;
  TraceLabels labels;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(trim(text.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

double parse_number(const std::string& text, const std::string& what) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw UsageError("invalid number '" + text + "' in " + what);
  }
  return value;
}

std::vector<double> parse_list(const std::string& text,
                               const std::string& what) {
  std::vector<double> values;
  for (const std::string& part : split(text, ',')) {
    values.push_back(parse_number(part, what));
  }
  return values;
}

// Resolves "name=value,..." against the program's parameters.
std::vector<double> bind_point(const Function& fn, const std::string& text,
                               const std::string& flag) {
  const auto& params = fn.program.params;
  if (trim(text).empty()) {
    if (fn.default_point) return *fn.default_point;
    if (params.empty()) return {};
    throw UsageError("unbound parameter '" + params.front() + "' (use " +
                     flag + ")");
  }
  std::vector<std::optional<double>> values(params.size());
  for (const std::string& item : split(text, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw UsageError("malformed binding '" + item + "' in " + flag +
                       " (expected name=value)");
    }
    const std::string name = trim(item.substr(0, eq));
    const auto it = std::find(params.begin(), params.end(), name);
    if (it == params.end()) {
      throw UsageError("unknown parameter '" + name + "' in " + flag);
    }
    auto& slot = values[static_cast<std::size_t>(it - params.begin())];
    if (slot) throw UsageError("parameter '" + name + "' bound twice");
    slot = parse_number(trim(item.substr(eq + 1)), flag);
  }
  std::vector<double> point;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!values[i]) {
      throw UsageError("unbound parameter '" + params[i] + "' (use " + flag +
                       ")");
    }
    point.push_back(*values[i]);
  }
  return point;
}

Function load(const Options& o) {
  const int sources = static_cast<int>(!o.expr.empty()) +
                      static_cast<int>(!o.file.empty()) +
                      static_cast<int>(!o.example.empty());
  if (sources != 1) {
    throw UsageError("give exactly one of --expr, --file or --example");
  }
  Function fn;
  std::string source;
  if (!o.expr.empty()) {
    source = o.expr;
  } else if (!o.file.empty()) {
    std::ifstream in(o.file, std::ios::binary);
    if (!in) throw UsageError("cannot read file '" + o.file + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    source = ss.str();
  } else {
    const auto& examples = lang::canned_examples();
    const auto it = std::find_if(examples.begin(), examples.end(),
                                 [&](const auto& e) { return e.name == o.example; });
    if (it == examples.end()) {
      std::string names;
      for (const auto& e : examples) names += " " + e.name;
      throw UsageError("unknown example '" + o.example + "'; available:" +
                       names);
    }
    source = it->source;
    fn.default_point = it->point;
  }
  fn.program = lang::parse(source);
  fn.labels = lang::labels_for(fn.program);
  return fn;
}

std::vector<std::string> output_names(const Tape& tape,
                                      const TraceLabels& labels) {
  std::vector<std::string> names;
  for (std::size_t j = 0; j < tape.num_outputs(); ++j) {
    names.push_back(labels.output(tape, j));
  }
  return names;
}

std::string named_row(const std::string& prefix,
                      const std::vector<std::string>& names,
                      std::span<const double> values, int precision) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ' ';
    out += prefix + names[i] + "=" + format_fixed(values[i], precision);
  }
  return out;
}

json named_object(const std::vector<std::string>& names,
                  std::span<const double> values) {
  json obj = json::object();
  for (std::size_t i = 0; i < values.size(); ++i) obj[names[i]] = values[i];
  return obj;
}

json ops_json(const OpCounter& c) {
  return json{{"primal", c.primal_ops},
              {"tangent", c.tangent_ops},
              {"adjoint", c.adjoint_ops}};
}

void require_single_output(const Tape& tape, const std::string& command) {
  if (tape.num_outputs() != 1) {
    throw UsageError(command + " needs a single-output function (got " +
                     std::to_string(tape.num_outputs()) +
                     " outputs); use jacobian");
  }
}

std::string scientific(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const Function fn = load(o);
  const std::vector<double> x = bind_point(fn, o.at, "--at");
  const Tape tape = lang::trace(fn.program, x);
  std::vector<double> values;
  for (NodeIndex i : tape.outputs()) values.push_back(tape.node(i).value);
  const auto names = output_names(tape, fn.labels);
  if (o.json) {
    out << json{{"outputs", named_object(names, values)}}.dump(2) << "\n";
    return kExitOk;
  }
  if (o.trace) out << format_primal_trace(tape, fn.labels, o.precision) << "\n";
  if (values.size() == 1) {
    out << format_fixed(values[0], o.precision) << "\n";
  } else {
    out << named_row("", names, values, o.precision) << "\n";
  }
  return kExitOk;
}

int cmd_grad(const Options& o, std::ostream& out) {
  const Function fn = load(o);
  const std::vector<double> x = bind_point(fn, o.at, "--at");
  const Tape tape = lang::trace(fn.program, x);
  require_single_output(tape, "grad");
  OpCounter ops;
  std::vector<double> g;
  if (o.mode == "forward") {
    const Matrix j = jacobian_forward(tape, x, &ops);
    g.assign(j.data().begin(), j.data().end());
  } else {
    g = gradient(tape, x, &ops);
  }
  const double value = tape.node(tape.outputs()[0]).value;
  const auto& names = fn.program.params;
  if (o.json) {
    out << json{{"gradient", named_object(names, g)},
                {"value", value},
                {"mode", o.mode},
                {"ops", ops_json(ops)}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  if (o.trace) {
    if (o.mode == "forward") {
      for (std::size_t i = 0; i < x.size(); ++i) {
        out << format_tangent_trace(tape, SeedVector::unit(x.size(), i),
                                    fn.labels, o.precision)
            << "\n";
      }
    } else {
      out << format_primal_trace(tape, fn.labels, o.precision) << "\n"
          << format_adjoint_trace(tape, 0, fn.labels, o.precision) << "\n";
    }
  }
  out << named_row("d", names, g, o.precision) << "\n";
  return kExitOk;
}

int cmd_jacobian(const Options& o, std::ostream& out) {
  const Function fn = load(o);
  const std::vector<double> x = bind_point(fn, o.at, "--at");
  const Tape tape = lang::trace(fn.program, x);
  OpCounter ops;
  const Matrix j = o.mode == "forward" ? jacobian_forward(tape, x, &ops)
                                       : jacobian_reverse(tape, x, &ops);
  const auto outs = output_names(tape, fn.labels);
  const auto& ins = fn.program.params;
  if (o.json) {
    json rows = json::array();
    for (std::size_t r = 0; r < j.rows(); ++r) {
      const auto row = j.row(r);
      rows.push_back(std::vector<double>(row.begin(), row.end()));
    }
    out << json{{"outputs", outs},
                {"inputs", ins},
                {"jacobian", rows},
                {"mode", o.mode},
                {"ops", ops_json(ops)}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  for (std::size_t r = 0; r < j.rows(); ++r) {
    out << outs[r] << ": " << named_row("d", ins, j.row(r), o.precision)
        << "\n";
  }
  return kExitOk;
}

int cmd_hvp(const Options& o, std::ostream& out) {
  const Function fn = load(o);
  const std::vector<double> x = bind_point(fn, o.at, "--at");
  const std::vector<double> v = parse_list(o.vector, "--vector");
  if (v.size() != x.size()) {
    throw UsageError("--vector has " + std::to_string(v.size()) +
                     " components but the function has " +
                     std::to_string(x.size()) + " parameters");
  }
  const Tape tape = lang::trace(fn.program, x);
  require_single_output(tape, "hvp");
  OpCounter ops;
  const GradientHvp r = gradient_and_hvp(tape, {x, v}, &ops);
  const auto& names = fn.program.params;
  if (o.json) {
    out << json{{"hvp", named_object(names, r.hvp)},
                {"gradient", named_object(names, r.gradient)},
                {"value", r.value},
                {"ops", ops_json(ops)}}
               .dump(2)
        << "\n";
    return kExitOk;
  }
  out << named_row("Hv_", names, r.hvp, o.precision) << "\n";
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  const Function fn = load(o);
  const std::vector<double> x = bind_point(fn, o.at, "--at");
  const Tape tape = lang::trace(fn.program, x);
  require_single_output(tape, "check");
  const std::vector<double> ad = gradient(tape, x);

  baseline::FdConfig config;
  config.step = o.fd_step;
  config.scheme = o.scheme == "forward" ? baseline::FdScheme::Forward
                                        : baseline::FdScheme::Central;
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const auto& program = fn.program;
  const std::vector<double> fd = baseline::fd_gradient(
      [&program](std::span<const double> p) {
        const Tape t = lang::trace(program, p);
        return t.node(t.outputs()[0]).value;
      },
      x, config);

  std::vector<double> rel(ad.size());
  double max_rel = 0.0;
  for (std::size_t i = 0; i < ad.size(); ++i) {
    rel[i] = std::abs(ad[i] - fd[i]) / std::max(1.0, std::abs(ad[i]));
    max_rel = std::max(max_rel, rel[i]);
  }
  const bool pass = max_rel < o.check_tol;
  const auto& names = fn.program.params;

  if (o.json) {
    out << json{{"ad", named_object(names, ad)},
                {"fd", named_object(names, fd)},
                {"rel_err", named_object(names, rel)},
                {"max_rel_err", max_rel},
                {"tolerance", o.check_tol},
                {"pass", pass}}
               .dump(2)
        << "\n";
  } else {
    std::vector<std::array<std::string, 4>> rows;
    rows.push_back({"param", "ad", "fd", "rel_err"});
    for (std::size_t i = 0; i < ad.size(); ++i) {
      rows.push_back({names[i], format_fixed(ad[i], o.precision),
                      format_fixed(fd[i], o.precision), scientific(rel[i])});
    }
    std::array<std::size_t, 4> width{};
    for (const auto& r : rows) {
      for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], r[c].size());
    }
    for (const auto& r : rows) {
      std::string line;
      for (std::size_t c = 0; c < 4; ++c) {
        if (c > 0) line += "  ";
        line += r[c];
        if (c < 3) line.append(width[c] - r[c].size(), ' ');
      }
      out << line << "\n";
    }
    out << (pass ? "PASS" : "FAIL") << " max_rel_err=" << scientific(max_rel)
        << " tolerance=" << scientific(o.check_tol) << "\n";
  }
  return pass ? kExitOk : kExitCheckFailed;
}

int cmd_graph(const Options& o, std::ostream& out) {
  const Function fn = load(o);
  std::vector<double> x;
  if (trim(o.at).empty() && !fn.default_point) {
    x.assign(fn.program.params.size(), 1.0);
  } else {
    x = bind_point(fn, o.at, "--at");
  }
  const Tape tape = lang::trace(fn.program, x);
  out << export_dot(tape, fn.labels);
  return kExitOk;
}

// p_k(x) = sin(1*x) * sin(2*x) * ... * sin(k*x)
std::string product_chain(int k) {
  std::string s;
  for (int i = 1; i <= k; ++i) {
    if (i > 1) s += " * ";
    s += "sin(" + std::to_string(i) + "*x)";
  }
  return s;
}

int cmd_swell(const Options& o, std::ostream& out) {
  const auto level = o.simplify == "extended" ? baseline::Simplify::Extended
                                              : baseline::Simplify::Minimal;
  json rows = json::array();
  std::vector<std::array<std::string, 4>> table;
  table.push_back({"k", "expr_size", "deriv_size", "tape_nodes"});
  for (int k = 1; k <= o.depth; ++k) {
    const lang::ProgramAst program = lang::parse(product_chain(k));
    const baseline::SymExpr e = baseline::from_program(program);
    const baseline::SymExpr d = baseline::sym_diff(e, "x", level);
    const std::vector<double> x{0.5};
    const Tape tape = lang::trace(program, x);
    rows.push_back(json{{"k", k},
                        {"expr_size", e.size()},
                        {"deriv_size", d.size()},
                        {"tape_nodes", tape.size()}});
    table.push_back({std::to_string(k), std::to_string(e.size()),
                     std::to_string(d.size()), std::to_string(tape.size())});
  }
  if (o.json) {
    out << json{{"simplify", o.simplify}, {"rows", rows}}.dump(2) << "\n";
    return kExitOk;
  }
  std::array<std::size_t, 4> width{};
  for (const auto& r : table) {
    for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], r[c].size());
  }
  for (const auto& r : table) {
    std::string line;
    for (std::size_t c = 0; c < 4; ++c) {
      if (c > 0) line += "  ";
      line.append(width[c] - r[c].size(), ' ');
      line += r[c];
    }
    out << line << "\n";
  }
  return kExitOk;
}

int cmd_opt(const Options& o, std::ostream& out, std::ostream& err) {
  const Function fn = load(o);
  const std::vector<double> w0 = bind_point(fn, o.w0, "--w0");
  const TapeBuilder builder = lang::make_tape_builder(fn.program);
  require_single_output(builder(w0), "opt");

  OptTrajectory traj;
  try {
    if (o.method == "newton-cg") {
      NewtonCgConfig config;
      config.max_iters = o.max_iters;
      config.grad_tol = o.opt_tol;
      config.validate();
      traj = newton_cg(builder, w0, config);
    } else {
      GdConfig config;
      config.step = o.eta;
      config.max_iters = o.max_iters;
      config.grad_tol = o.opt_tol;
      config.validate();
      traj = gradient_descent(builder, w0, config);
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  const auto& names = fn.program.params;
  if (o.json) {
    json iterates = json::array();
    for (std::size_t k = 0; k < traj.iterates.size(); ++k) {
      const Iterate& it = traj.iterates[k];
      iterates.push_back(json{{"iter", k},
                              {"f", it.f},
                              {"grad_inf_norm", it.grad_inf_norm},
                              {"w", named_object(names, it.w)}});
    }
    json doc{{"method", o.method},
             {"termination", termination_name(traj.termination)},
             {"gradient_evals", traj.gradient_evals},
             {"hvp_evals", traj.hvp_evals},
             {"iterates", iterates}};
    if (!traj.message.empty()) doc["message"] = traj.message;
    out << doc.dump(2) << "\n";
  } else {
    out << trajectory_csv(traj, names);
  }
  err << "termination: " << termination_name(traj.termination) << " after "
      << (traj.iterates.empty() ? 0 : traj.iterates.size() - 1)
      << " iterations";
  if (!traj.message.empty()) err << " (" << traj.message << ")";
  err << "\n";
  return traj.termination == Termination::DomainError ? kExitDomain : kExitOk;
}

void add_source_options(CLI::App* cmd, Options& o) {
  cmd->add_option("-e,--expr", o.expr, "Expression list or program text");
  cmd->add_option("-f,--file", o.file, "Read the program from a file");
  cmd->add_option("--example", o.example, "Use a built-in example program");
}

void add_point_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--at", o.at, "Parameter bindings, e.g. x1=2,x2=5");
  cmd->add_option("--precision", o.precision, "Decimals in text output")
      ->check(CLI::Range(0, 17));
  cmd->add_flag("--json", o.json, "Emit JSON at full precision");
}

void add_mode_option(CLI::App* cmd, Options& o) {
  cmd->add_option("--mode", o.mode, "AD mode")
      ->check(CLI::IsMember({"forward", "reverse"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Scalar automatic differentiation on traced programs", "wengert"};
  app.require_subcommand(1);

  auto* eval = app.add_subcommand("eval", "Evaluate the function");
  add_source_options(eval, o);
  add_point_options(eval, o);
  eval->add_flag("--trace", o.trace, "Print the forward evaluation trace");

  auto* grad = app.add_subcommand("grad", "Gradient of a scalar function");
  add_source_options(grad, o);
  add_point_options(grad, o);
  add_mode_option(grad, o);
  grad->add_flag("--trace", o.trace,
                 "Print tangent (forward) or adjoint (reverse) traces");

  auto* jac = app.add_subcommand("jacobian", "Full Jacobian");
  add_source_options(jac, o);
  add_point_options(jac, o);
  add_mode_option(jac, o);

  auto* hv = app.add_subcommand("hvp", "Hessian-vector product");
  add_source_options(hv, o);
  add_point_options(hv, o);
  hv->add_option("--vector", o.vector, "Direction v, e.g. 1,0")->required();

  auto* check = app.add_subcommand(
      "check", "Compare the AD gradient with finite differences");
  add_source_options(check, o);
  add_point_options(check, o);
  check->add_option("--fd-step", o.fd_step, "Fixed finite-difference step");
  check->add_option("--scheme", o.scheme, "Finite-difference scheme")
      ->check(CLI::IsMember({"central", "forward"}));
  check->add_option("--tol", o.check_tol, "Maximum relative error")
      ->check(CLI::PositiveNumber);

  auto* graph = app.add_subcommand(
      "graph", "Computational graph as DOT (parameters default to 1)");
  add_source_options(graph, o);
  graph->add_option("--at", o.at, "Parameter bindings used while tracing");

  auto* swell = app.add_subcommand(
      "swell", "Symbolic derivative size vs tape size on product chains");
  swell->add_option("--depth", o.depth, "Largest chain length")
      ->check(CLI::Range(1, 200));
  swell->add_option("--simplify", o.simplify, "Symbolic simplifier")
      ->check(CLI::IsMember({"minimal", "extended"}));
  swell->add_flag("--json", o.json, "Emit JSON");

  auto* opt = app.add_subcommand("opt", "Minimize; prints the trajectory as CSV");
  add_source_options(opt, o);
  opt->add_option("--w0", o.w0, "Starting point, e.g. x=0");
  opt->add_option("--method", o.method, "Optimizer")
      ->check(CLI::IsMember({"gd", "newton-cg"}));
  opt->add_option("--eta", o.eta, "Gradient descent step size");
  opt->add_option("--max-iters", o.max_iters, "Iteration cap");
  opt->add_option("--tol", o.opt_tol, "Stop when max |df/dw_i| < tol");
  opt->add_flag("--json", o.json, "Emit JSON instead of CSV");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(o, out);
    if (*grad) return cmd_grad(o, out);
    if (*jac) return cmd_jacobian(o, out);
    if (*hv) return cmd_hvp(o, out);
    if (*check) return cmd_check(o, out);
    if (*graph) return cmd_graph(o, out);
    if (*swell) return cmd_swell(o, out);
    if (*opt) return cmd_opt(o, out, err);
  } catch (const lang::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const lang::TraceError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace wengert::cli
