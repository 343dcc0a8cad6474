// SPDX-License-Identifier: Apache-2.0

#include "ccm/optimizer.hpp"

#include "ccm/cr_calculus.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ccm {
namespace {

double checked_cost(const HermitianMatrix &a, const ManifoldPoint &x,
                    std::size_t iter) {
  const double f = quadratic_cost(a, x.vec());
  if (!std::isfinite(f)) {
    std::ostringstream msg;
    msg << "solve_rgd: non-finite cost at iterate " << iter;
    throw NumericalError(msg.str());
  }
  return f;
}

} // namespace

void OptimizerConfig::validate() const {
  if (max_iters == 0)
    throw std::invalid_argument("max_iters must be positive");
  if (!(grad_tol >= 0.0) || !std::isfinite(grad_tol))
    throw std::invalid_argument("grad_tol must be a finite value >= 0");
  if (initial_step && (!(*initial_step > 0.0) || !std::isfinite(*initial_step)))
    throw std::invalid_argument("initial_step must be finite and > 0");
  if (!(armijo_c > 0.0 && armijo_c < 1.0))
    throw std::invalid_argument("armijo_c must lie in (0, 1)");
  if (!(backtrack_factor > 0.0 && backtrack_factor < 1.0))
    throw std::invalid_argument("backtrack_factor must lie in (0, 1)");
  if (max_backtracks == 0)
    throw std::invalid_argument("max_backtracks must be positive");
}

double OptimizerConfig::resolved_initial_step(const HermitianMatrix &a) const {
  if (initial_step)
    return *initial_step;
  return 1.0 / (2.0 * a.row_inf_norm() + std::numeric_limits<double>::epsilon());
}

std::string_view to_string(SolveStatus status) noexcept {
  switch (status) {
  case SolveStatus::converged:
    return "converged";
  case SolveStatus::max_iters:
    return "max_iters";
  case SolveStatus::line_search_failed:
    return "line_search_failed";
  }
  return "unknown";
}

std::optional<ArmijoResult> armijo_step(const HermitianMatrix &a,
                                        const ManifoldPoint &x, double cost,
                                        const TangentVector &g,
                                        const OptimizerConfig &config) {
  const double slope = squared_norm(g.vec());
  double t = config.resolved_initial_step(a);
  for (std::size_t k = 0; k <= config.max_backtracks; ++k) {
    if (k > 0)
      t *= config.backtrack_factor;
    const ManifoldPoint trial = retract(x, scale(-t, g));
    const double f_trial = quadratic_cost(a, trial.vec());
    if (!std::isfinite(f_trial))
      throw NumericalError("armijo_step: non-finite cost at trial point");
    // The strict test keeps the recorded cost sequence strictly decreasing
    // even when c t |g|^2 falls below the resolution of f.
    if (f_trial <= cost - config.armijo_c * t * slope && f_trial < cost)
      return ArmijoResult{t, trial, f_trial, k};
  }
  return std::nullopt;
}

std::optional<ArmijoResult> armijo_step(const HermitianMatrix &a,
                                        const ManifoldPoint &x,
                                        const TangentVector &g,
                                        const OptimizerConfig &config) {
  return armijo_step(a, x, quadratic_cost(a, x.vec()), g, config);
}

SolveResult solve_rgd(const HermitianMatrix &a, const ManifoldPoint &x0,
                      const OptimizerConfig &config) {
  require_same_size(a.dim(), x0.size(), "solve_rgd");
  config.validate();

  ManifoldPoint x = x0;
  double cost = checked_cost(a, x, 0);
  std::vector<IterationRecord> trace;
  double last_step = 0.0;
  std::size_t last_backtracks = 0;

  for (std::size_t iter = 0;; ++iter) {
    const TangentVector g = riemannian_gradient(a, x);
    const double grad_norm = norm(g.vec());
    trace.push_back({iter, cost, grad_norm, last_step, last_backtracks});

    if (grad_norm <= config.grad_tol)
      return {x, cost, std::move(trace), SolveStatus::converged};
    if (iter == config.max_iters)
      return {x, cost, std::move(trace), SolveStatus::max_iters};

    auto accepted = armijo_step(a, x, cost, g, config);
    if (!accepted)
      return {x, cost, std::move(trace), SolveStatus::line_search_failed};

    if (!std::isfinite(accepted->cost_new)) {
      std::ostringstream msg;
      msg << "solve_rgd: non-finite cost at iterate " << iter + 1;
      throw NumericalError(msg.str());
    }
    x = std::move(accepted->x_new);
    cost = accepted->cost_new;
    last_step = accepted->step;
    last_backtracks = accepted->backtracks;
  }
}

} // namespace ccm
