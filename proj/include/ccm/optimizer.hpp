// SPDX-License-Identifier: Apache-2.0
//
// Riemannian gradient descent with Armijo backtracking on the complex circle
// manifold.

#pragma once

#include "ccm/manifold.hpp"
#include "ccm/types.hpp"

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace ccm {

struct OptimizerConfig {
  std::size_t max_iters = 1000;
  double grad_tol = 1e-8;
  /// Unset means 1 / (2 |A|_row_inf + eps), resolved per problem.
  std::optional<double> initial_step;
  double armijo_c = 1e-4;
  double backtrack_factor = 0.5;
  std::size_t max_backtracks = 60;

  /// Throws std::invalid_argument if any bound is violated.
  void validate() const;

  /// Step used for A: `initial_step` if set, else the heuristic above.
  double resolved_initial_step(const HermitianMatrix &a) const;
};

/// One entry per iterate x_k. `step` and `backtracks` describe the line
/// search that produced x_k (zero for k = 0).
struct IterationRecord {
  std::size_t iter = 0;
  double cost = 0.0;
  double grad_norm = 0.0;
  double step = 0.0;
  std::size_t backtracks = 0;
};

enum class SolveStatus { converged, max_iters, line_search_failed };

std::string_view to_string(SolveStatus status) noexcept;

struct SolveResult {
  ManifoldPoint x_final;
  double cost_final;
  std::vector<IterationRecord> trace;
  SolveStatus status;

  double grad_norm_final() const { return trace.back().grad_norm; }
  std::size_t iterations() const { return trace.back().iter; }
};

struct ArmijoResult {
  double step;
  ManifoldPoint x_new;
  double cost_new;
  std::size_t backtracks;
};

/// Tries t = initial_step * backtrack_factor^k for k = 0..max_backtracks and
/// returns the first t with f(R_x(-t g)) <= f(x) - armijo_c t |g|^2 and
/// f(R_x(-t g)) < f(x). Returns nullopt when no trial step qualifies.
std::optional<ArmijoResult> armijo_step(const HermitianMatrix &a,
                                        const ManifoldPoint &x,
                                        const TangentVector &g,
                                        const OptimizerConfig &config);

/// Overload taking f(x) precomputed.
std::optional<ArmijoResult> armijo_step(const HermitianMatrix &a,
                                        const ManifoldPoint &x, double cost,
                                        const TangentVector &g,
                                        const OptimizerConfig &config);

/// Minimizes x^H A x over the manifold starting from x0. Throws
/// DimensionError on size mismatch and NumericalError (naming the iterate)
/// if the cost stops being finite.
SolveResult solve_rgd(const HermitianMatrix &a, const ManifoldPoint &x0,
                      const OptimizerConfig &config = {});

} // namespace ccm
