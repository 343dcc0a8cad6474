// SPDX-License-Identifier: Apache-2.0
//
// Numerical verification of the gradient and projection identities on a
// given Hermitian matrix, at random points. Every check compares the
// library's result against an independent route: central differences for
// gradients, and the explicit real-coordinate formulas for the projection.

#pragma once

#include "ccm/types.hpp"

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace ccm::verify {

/// Tolerances the suite enforces.
struct Tolerances {
  double gradient_fd = 1e-6;
  double partials = 1e-12;
  double riemannian_fd = 1e-6;
  double tangency = 1e-12;
  double idempotence = 1e-14;
  double split = 4.0 * std::numeric_limits<double>::epsilon();
  double orthogonality = 1e-12;
  double pythagoras = 1e-10;
  double real_form = 1e-15;
  double dimension = 1e-10;
  double retraction_ratio_lo = 0.005;
  double retraction_ratio_hi = 0.02;
  double retraction_modulus = 1e-15;
};

struct CheckOutcome {
  std::string name;
  /// Worst observed value over all trials.
  double worst;
  /// Accepted range [lower, upper].
  double lower;
  double upper;
  /// For two-sided checks, the value on the other side of the range.
  double best;

  bool passed() const { return worst >= lower && worst <= upper && best >= lower && best <= upper; }
};

struct SuiteOptions {
  std::size_t trials = 20;
  std::uint64_t seed = 1;
  double fd_step = 1e-6;
  /// Multiplies every sampled base point. 1.0 leaves points on the
  /// manifold; other values exist to exercise the failure path.
  double point_modulus = 1.0;
  Tolerances tol{};
};

/// Runs every check for `options.trials` random (x, z) pairs.
std::vector<CheckOutcome> run_suite(const HermitianMatrix &a,
                                    const SuiteOptions &options);

bool all_passed(const std::vector<CheckOutcome> &outcomes);

/// The projection written out coordinate by coordinate in R^2n:
///   out_{2i-1} = z_i^1 - (z_i^1 (x_i^1)^2 + z_i^2 x_i^1 x_i^2)
///   out_{2i}   = z_i^2 - (z_i^2 (x_i^2)^2 + z_i^1 x_i^1 x_i^2)
RealVec project_real_form(const RealVec &x, const RealVec &z);

/// Trace of the R^2n matrix of the projection at x, assembled by projecting
/// each of the 2n standard basis vectors.
double projection_trace(const ComplexVec &x);

/// ||retract(x, t xi) - (x + t xi)||_2 for raw vectors.
double retraction_error(const ComplexVec &x, const ComplexVec &xi, double t);

/// Standard complex Gaussian vector (E|z_i|^2 = 1), seeded.
ComplexVec random_gaussian(std::size_t n, std::uint64_t seed);

} // namespace ccm::verify
