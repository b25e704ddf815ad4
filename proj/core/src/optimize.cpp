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

#include "wengert/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "wengert/reverse.hpp"
#include "wengert/trace_format.hpp"

namespace wengert {

std::string_view termination_name(Termination t) noexcept {
  switch (t) {
    case Termination::Converged: return "converged";
    case Termination::MaxIters: return "max-iters";
    case Termination::DomainError: return "domain-error";
    case Termination::LineSearchFailed: return "line-search-failed";
  }
  return "?";
}

void GdConfig::validate() const {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("gradient descent: step must be positive");
  }
  if (max_iters < 1) {
    throw std::invalid_argument("gradient descent: max_iters must be >= 1");
  }
  if (!(grad_tol > 0.0)) {
    throw std::invalid_argument("gradient descent: grad_tol must be positive");
  }
}

void NewtonCgConfig::validate() const {
  if (max_iters < 1) {
    throw std::invalid_argument("newton-cg: max_iters must be >= 1");
  }
  if (!(grad_tol > 0.0)) {
    throw std::invalid_argument("newton-cg: grad_tol must be positive");
  }
  if (!(cg_rel_tol > 0.0)) {
    throw std::invalid_argument("newton-cg: cg_rel_tol must be positive");
  }
  if (!(armijo_c > 0.0 && armijo_c < 1.0)) {
    throw std::invalid_argument("newton-cg: armijo_c must lie in (0, 1)");
  }
}

namespace {

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// y += alpha * x
void axpy(double alpha, const std::vector<double>& x, std::vector<double>& y) {
  for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

struct Sample {
  Tape tape;
  double f = 0.0;
  std::vector<double> grad;
};

Sample sample(const TapeBuilder& f, const std::vector<double>& w,
              OptTrajectory& traj) {
  Sample s{f(w), 0.0, {}};
  if (s.tape.num_outputs() != 1) {
    throw std::invalid_argument("optimizer: function must have one output");
  }
  s.f = s.tape.node(s.tape.outputs()[0]).value;
  s.grad = gradient(s.tape, w, &traj.ops);
  ++traj.gradient_evals;
  return s;
}

void record(OptTrajectory& traj, const std::vector<double>& w,
            const Sample& s) {
  traj.iterates.push_back({w, s.f, inf_norm(s.grad)});
}

// Approximately solves H d = -g. Stops at relative residual tol, after n
// iterations, or on non-positive curvature (returning the current d, or -g
// if that happens on the first iteration).
std::vector<double> cg_direction(const Tape& tape, const std::vector<double>& w,
                                 const std::vector<double>& g,
                                 const NewtonCgConfig& config,
                                 OptTrajectory& traj) {
  const std::size_t n = g.size();
  std::vector<double> d(n, 0.0);
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = -g[i];
  std::vector<double> p = r;
  double rr = dot(r, r);
  const double stop = config.cg_rel_tol * std::sqrt(rr);

  for (std::size_t k = 0; k < n; ++k) {
    if (std::sqrt(rr) <= stop) break;
    const std::vector<double> hp = hvp(tape, {w, p}, &traj.ops);
    ++traj.hvp_evals;
    const double curvature = dot(p, hp);
    if (!(curvature > 0.0)) {
      if (k == 0) return r;
      break;
    }
    const double alpha = rr / curvature;
    axpy(alpha, p, d);
    axpy(-alpha, hp, r);
    const double rr_next = dot(r, r);
    const double beta = rr_next / rr;
    rr = rr_next;
    for (std::size_t i = 0; i < n; ++i) p[i] = r[i] + beta * p[i];
  }
  return d;
}

}  // namespace

OptTrajectory gradient_descent(const TapeBuilder& f, std::vector<double> w0,
                               const GdConfig& config) {
  config.validate();
  OptTrajectory traj;
  std::vector<double> w = std::move(w0);
  try {
    for (std::size_t k = 0;; ++k) {
      const Sample s = sample(f, w, traj);
      record(traj, w, s);
      if (traj.iterates.back().grad_inf_norm < config.grad_tol) {
        traj.termination = Termination::Converged;
        break;
      }
      if (k == config.max_iters) {
        traj.termination = Termination::MaxIters;
        break;
      }
      axpy(-config.step, s.grad, w);
    }
  } catch (const DomainError& e) {
    traj.termination = Termination::DomainError;
    traj.message = e.what();
  }
  return traj;
}

OptTrajectory newton_cg(const TapeBuilder& f, std::vector<double> w0,
                        const NewtonCgConfig& config) {
  config.validate();
  OptTrajectory traj;
  std::vector<double> w = std::move(w0);
  try {
    Sample s = sample(f, w, traj);
    record(traj, w, s);
    for (std::size_t k = 0;; ++k) {
      if (traj.iterates.back().grad_inf_norm < config.grad_tol) {
        traj.termination = Termination::Converged;
        break;
      }
      if (k == config.max_iters) {
        traj.termination = Termination::MaxIters;
        break;
      }
      const std::vector<double> d = cg_direction(s.tape, w, s.grad, config, traj);
      const double slope = dot(s.grad, d);

      bool accepted = false;
      double alpha = 1.0;
      std::vector<double> trial(w.size());
      for (std::size_t b = 0; b <= config.max_backtracks; ++b, alpha *= 0.5) {
        trial = w;
        axpy(alpha, d, trial);
        double f_trial = 0.0;
        try {
          const Tape t = f(trial);
          f_trial = t.node(t.outputs()[0]).value;
        } catch (const DomainError&) {
          continue;
        }
        if (f_trial <= s.f + config.armijo_c * alpha * slope) {
          accepted = true;
          break;
        }
      }
      if (!accepted) {
        traj.termination = Termination::LineSearchFailed;
        traj.message = "no step along the Newton direction decreased f";
        break;
      }
      w = trial;
      s = sample(f, w, traj);
      record(traj, w, s);
    }
  } catch (const DomainError& e) {
    traj.termination = Termination::DomainError;
    traj.message = e.what();
  }
  return traj;
}

std::string trajectory_csv(const OptTrajectory& trajectory,
                           const std::vector<std::string>& names) {
  std::string out = "iter,f,grad_inf_norm";
  for (const std::string& n : names) out += "," + n;
  out += "\n";
  for (std::size_t k = 0; k < trajectory.iterates.size(); ++k) {
    const Iterate& it = trajectory.iterates[k];
    out += std::to_string(k) + "," + format_shortest(it.f) + "," +
           format_shortest(it.grad_inf_norm);
    for (double x : it.w) out += "," + format_shortest(x);
    out += "\n";
  }
  return out;
}

}  // namespace wengert
