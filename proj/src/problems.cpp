// SPDX-License-Identifier: Apache-2.0

#include "ccm/problems.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace ccm {
namespace {

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

std::string join(const std::vector<double> &values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0)
      out += ",";
    out += format_double(values[i]);
  }
  return out;
}

// Fills the lower triangle from the upper one and forces a real diagonal.
HermitianMatrix from_upper(std::size_t n, std::vector<cplx> entries) {
  for (std::size_t i = 0; i < n; ++i) {
    entries[i * n + i] = cplx(entries[i * n + i].real(), 0.0);
    for (std::size_t k = i + 1; k < n; ++k)
      entries[k * n + i] = std::conj(entries[i * n + k]);
  }
  return HermitianMatrix(n, std::move(entries), 0.0);
}

} // namespace

ProblemInstance make_random_hermitian(std::size_t n, std::uint64_t seed,
                                      double scale) {
  if (n == 0)
    throw DimensionError("make_random_hermitian: dimension must be >= 1");
  if (!(scale > 0.0) || !std::isfinite(scale))
    throw std::invalid_argument("make_random_hermitian: scale must be > 0");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, std::numbers::sqrt2 / 2.0);
  std::vector<cplx> b(n * n);
  for (cplx &c : b) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    c = cplx(re, im);
  }

  std::vector<cplx> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    a[i * n + i] = cplx(scale * b[i * n + i].real(), 0.0);
    for (std::size_t k = i + 1; k < n; ++k)
      a[i * n + k] = scale * 0.5 * (b[i * n + k] + std::conj(b[k * n + i]));
  }

  std::ostringstream label;
  label << "random-hermitian n=" << n << " seed=" << seed;
  return ProblemInstance{from_upper(n, std::move(a)),
                         label.str(),
                         "random-hermitian",
                         {{"n", std::to_string(n)},
                          {"seed", std::to_string(seed)},
                          {"scale", format_double(scale)}}};
}

ComplexVec steering_vector(std::size_t n_elements, double angle) {
  if (n_elements == 0)
    throw DimensionError("steering_vector: need at least one element");
  std::vector<cplx> a(n_elements);
  const double phase_step = std::numbers::pi * std::sin(angle);
  for (std::size_t m = 0; m < n_elements; ++m) {
    const double phase = phase_step * static_cast<double>(m);
    a[m] = cplx(std::cos(phase), std::sin(phase));
  }
  return ComplexVec(std::move(a));
}

ProblemInstance make_steering_problem(std::size_t n_elements,
                                      const std::vector<double> &angles,
                                      const std::vector<double> &weights) {
  if (n_elements == 0)
    throw DimensionError("make_steering_problem: need at least one element");
  if (angles.empty() || angles.size() != weights.size()) {
    std::ostringstream msg;
    msg << "make_steering_problem: need matching, non-empty angle and weight "
           "lists (got "
        << angles.size() << " angles, " << weights.size() << " weights)";
    throw DimensionError(msg.str());
  }
  for (std::size_t k = 0; k < weights.size(); ++k) {
    if (!(weights[k] >= 0.0) || !std::isfinite(weights[k])) {
      std::ostringstream msg;
      msg << "make_steering_problem: weight " << k << " = " << weights[k]
          << " must be finite and >= 0";
      throw ConstraintError(msg.str());
    }
    if (!std::isfinite(angles[k]))
      throw ConstraintError("make_steering_problem: angles must be finite");
  }

  const std::size_t n = n_elements;
  std::vector<cplx> a(n * n, cplx(0.0, 0.0));
  for (std::size_t k = 0; k < angles.size(); ++k) {
    const ComplexVec s = steering_vector(n, angles[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = i; l < n; ++l)
        a[i * n + l] += weights[k] * (s[i] * std::conj(s[l]));
  }

  std::ostringstream label;
  label << "steering n=" << n << " angles=" << join(angles);
  return ProblemInstance{from_upper(n, std::move(a)),
                         label.str(),
                         "steering",
                         {{"n", std::to_string(n)},
                          {"angles", join(angles)},
                          {"weights", join(weights)}}};
}

OracleResult brute_force_min(const HermitianMatrix &a,
                             std::size_t grid_levels) {
  const std::size_t n = a.dim();
  if (n > kOracleMaxDim) {
    std::ostringstream msg;
    msg << "brute_force_min: exhaustive search is limited to n <= "
        << kOracleMaxDim << " (got n = " << n << ")";
    throw DimensionError(msg.str());
  }
  if (grid_levels < kOracleMinLevels) {
    std::ostringstream msg;
    msg << "brute_force_min: grid_levels must be >= " << kOracleMinLevels;
    throw std::invalid_argument(msg.str());
  }

  std::vector<cplx> phases(grid_levels);
  for (std::size_t k = 0; k < grid_levels; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) /
                         static_cast<double>(grid_levels);
    phases[k] = cplx(std::cos(theta), std::sin(theta));
  }

  // f(x) = sum_i a_ii + 2 sum_{i<k} Re{conj(x_i) a_ik x_k}
  double diagonal = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    diagonal += a(i, i).real();

  std::vector<std::size_t> idx(n - 1, 0);
  std::vector<cplx> x(n, cplx(1.0, 0.0));
  auto evaluate = [&] {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = i + 1; k < n; ++k)
        off += (std::conj(x[i]) * a(i, k) * x[k]).real();
    return diagonal + 2.0 * off;
  };

  OracleResult best{std::numeric_limits<double>::infinity(), idx, grid_levels};
  // Odometer in lexicographic order, last index fastest.
  auto advance = [&] {
    for (std::size_t pos = idx.size(); pos-- > 0;) {
      if (++idx[pos] < grid_levels)
        return true;
      idx[pos] = 0;
    }
    return false;
  };
  do {
    for (std::size_t i = 1; i < n; ++i)
      x[i] = phases[idx[i - 1]];
    const double f = evaluate();
    if (f < best.value) {
      best.value = f;
      best.argmin_phases = idx;
    }
  } while (advance());
  return best;
}

ComplexVec oracle_point(const OracleResult &r) {
  std::vector<cplx> x(r.argmin_phases.size() + 1, cplx(1.0, 0.0));
  for (std::size_t i = 0; i < r.argmin_phases.size(); ++i) {
    const double theta = 2.0 * std::numbers::pi *
                         static_cast<double>(r.argmin_phases[i]) /
                         static_cast<double>(r.grid_levels);
    x[i + 1] = cplx(std::cos(theta), std::sin(theta));
  }
  return ComplexVec(std::move(x));
}

double min_eigenvalue(const HermitianMatrix &a) {
  const auto n = static_cast<Eigen::Index>(a.dim());
  Eigen::MatrixXcd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index k = 0; k < n; ++k)
      m(i, k) = a(static_cast<std::size_t>(i), static_cast<std::size_t>(k));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalError("min_eigenvalue: eigensolver did not converge");
  return solver.eigenvalues().minCoeff();
}

double eigen_lower_bound(const HermitianMatrix &a) {
  return static_cast<double>(a.dim()) * min_eigenvalue(a);
}

GridLadder grid_resolution_ladder(const HermitianMatrix &a,
                                  std::size_t levels) {
  if (levels % 2 != 0 || levels / 2 < kOracleMinLevels)
    throw std::invalid_argument(
        "grid_resolution_ladder: levels must be even and levels/2 >= 8");
  const double g_coarse = static_cast<double>(levels / 2);
  const double g_mid = static_cast<double>(levels);
  const double g_fine = static_cast<double>(2 * levels);

  GridLadder ladder{};
  ladder.coarse = brute_force_min(a, levels / 2).value;
  ladder.mid = brute_force_min(a, levels).value;
  ladder.fine = brute_force_min(a, 2 * levels).value;

  const double two_pi_sq = 4.0 * std::numbers::pi * std::numbers::pi;
  const double c =
      std::fmax(0.0, ladder.coarse - ladder.fine) /
      (two_pi_sq * (1.0 / (g_coarse * g_coarse) - 1.0 / (g_fine * g_fine)));
  ladder.resolution_bound = c * two_pi_sq / (g_mid * g_mid);
  return ladder;
}

} // namespace ccm
