// SPDX-License-Identifier: Apache-2.0
//
// Problem generators and small-scale oracles for min x^H A x over the
// complex circle manifold.

#pragma once

#include "ccm/types.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ccm {

struct ProblemInstance {
  HermitianMatrix a;
  std::string label;
  std::string generator;
  /// Generator parameters as printed key/value pairs.
  std::map<std::string, std::string> parameters;
};

/// A = scale * (B + B^H) / 2 with B_ik i.i.d. standard complex Gaussian
/// (E|B_ik|^2 = 1), seeded. The diagonal is exactly real and the lower
/// triangle is the exact conjugate of the upper one.
ProblemInstance make_random_hermitian(std::size_t n, std::uint64_t seed,
                                      double scale = 1.0);

/// Half-wavelength uniform linear array response a(theta)_m =
/// exp(j pi m sin theta), m = 0..n-1.
ComplexVec steering_vector(std::size_t n_elements, double angle);

/// A = sum_k w_k a(theta_k) a(theta_k)^H.
ProblemInstance make_steering_problem(std::size_t n_elements,
                                      const std::vector<double> &angles,
                                      const std::vector<double> &weights);

struct OracleResult {
  double value;
  /// Phase indices of x_2..x_n; x_1 is fixed to 1.
  std::vector<std::size_t> argmin_phases;
  std::size_t grid_levels;
};

inline constexpr std::size_t kOracleMaxDim = 4;
inline constexpr std::size_t kOracleMinLevels = 8;

/// Exhaustive minimum of x^H A x over x_1 = 1, x_i = exp(j 2 pi k_i / g).
/// Ties keep the lexicographically smallest index tuple.
OracleResult brute_force_min(const HermitianMatrix &a,
                             std::size_t grid_levels);

/// The point encoded by an oracle result.
ComplexVec oracle_point(const OracleResult &r);

/// n * lambda_min(A); a lower bound of x^H A x on the manifold.
double eigen_lower_bound(const HermitianMatrix &a);

/// Smallest eigenvalue of A. Throws NumericalError if the eigensolver fails.
double min_eigenvalue(const HermitianMatrix &a);

/// Self-calibrated grid-resolution bound for brute_force_min at
/// `levels`, from the ladder (levels/2, levels, 2*levels):
///   C = (v_{g/2} - v_{2g}) / ((2 pi)^2 (1/(g/2)^2 - 1/(2g)^2)),
///   bound = C (2 pi / g)^2.
struct GridLadder {
  double coarse;
  double mid;
  double fine;
  double resolution_bound;
};

GridLadder grid_resolution_ladder(const HermitianMatrix &a,
                                  std::size_t levels);

} // namespace ccm
