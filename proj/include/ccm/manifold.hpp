// SPDX-License-Identifier: Apache-2.0
//
// The complex circle manifold M = {x in C^n : |x_i| = 1 for all i}, viewed as
// an embedded submanifold of R^2n with the Euclidean inner product.
//
// T_x M = {z : Re{z (.) conj(x)} = 0}, and the normal space at x is spanned
// by the vectors that carry x_i in slot i and zero elsewhere. The normal
// part of z is therefore Re{z (.) conj(x)} (.) x, computed in closed form.

#pragma once

#include "ccm/types.hpp"

#include <cstdint>
#include <utility>

namespace ccm {

inline constexpr double kPointTol = 1e-9;
inline constexpr double kTangentTol = 1e-9;
inline constexpr double kRetractFloor = 1e-12;

/// Tangent tolerance scaled by the size of z: kTangentTol * (1 + |z|_inf).
double tangent_tolerance(const ComplexVec &z);

/// A ComplexVec whose entries all have modulus 1 (within the tolerance it
/// was validated against).
class ManifoldPoint {
public:
  /// Validates against kPointTol.
  explicit ManifoldPoint(ComplexVec x);
  ManifoldPoint(ComplexVec x, double tol);

  std::size_t size() const noexcept { return x_.size(); }
  const ComplexVec &vec() const noexcept { return x_; }
  const cplx &operator[](std::size_t i) const { return x_[i]; }

  friend bool operator==(const ManifoldPoint &,
                         const ManifoldPoint &) = default;

private:
  ComplexVec x_;
};

/// A direction z anchored at a ManifoldPoint with Re{z (.) conj(x)} = 0.
class TangentVector {
public:
  /// Validates tangency against tangent_tolerance(z).
  TangentVector(ManifoldPoint base, ComplexVec z);

  const ManifoldPoint &base() const noexcept { return base_; }
  const ComplexVec &vec() const noexcept { return z_; }
  std::size_t size() const noexcept { return z_.size(); }

private:
  struct trusted_t {};
  TangentVector(trusted_t, ManifoldPoint base, ComplexVec z)
      : base_(std::move(base)), z_(std::move(z)) {}

  friend TangentVector project(const ManifoldPoint &, const ComplexVec &);
  friend TangentVector scale(double, const TangentVector &);

  ManifoldPoint base_;
  ComplexVec z_;
};

/// The normal part Re{z (.) conj(x)} (.) x of a vector at x.
struct NormalComponent {
  ComplexVec v;
};

/// Throws ConstraintError naming the worst index and its modulus when
/// max_i ||x_i| - 1| > tol.
ManifoldPoint check_point(const ComplexVec &x, double tol = kPointTol);

/// x_i = exp(j theta_i), theta_i uniform on [0, 2 pi), seeded.
ManifoldPoint random_point(std::size_t n, std::uint64_t seed);

/// z - Re{z (.) conj(x)} (.) x
TangentVector project(const ManifoldPoint &x, const ComplexVec &z);

NormalComponent normal_component(const ManifoldPoint &x, const ComplexVec &z);

/// max_i |Re{z_i conj(x_i)}|
double tangent_residual(const ComplexVec &x, const ComplexVec &z);

bool is_tangent(const ManifoldPoint &x, const ComplexVec &z, double tol);
inline bool is_tangent(const ManifoldPoint &x, const ComplexVec &z) {
  return is_tangent(x, z, tangent_tolerance(z));
}

/// Projection of the Euclidean gradient 2 A x onto T_x M.
TangentVector riemannian_gradient(const HermitianMatrix &a,
                                  const ManifoldPoint &x);

/// alpha * xi, still anchored at the same point.
TangentVector scale(double alpha, const TangentVector &xi);

/// Componentwise metric projection (x_i + xi_i) / |x_i + xi_i|. Components
/// with xi_i == 0 are returned unchanged. Throws NumericalError when some
/// |x_i + xi_i| < kRetractFloor.
ManifoldPoint retract(const ManifoldPoint &x, const TangentVector &xi);

/// Same map for an arbitrary step; used to measure retraction error along
/// x + t xi without constructing intermediate tangent vectors.
ManifoldPoint retract(const ManifoldPoint &x, const ComplexVec &step);

namespace detail {

/// Projection applied to raw vectors, with no check that x is on M. The
/// verification suite uses this to run checks on deliberately perturbed
/// points.
ComplexVec project_raw(const ComplexVec &x, const ComplexVec &z);
ComplexVec normal_raw(const ComplexVec &x, const ComplexVec &z);
/// Returns the retracted vector and min_i |x_i + step_i| (see retract).
/// Throws NumericalError below kRetractFloor.
std::pair<ComplexVec, double> retract_raw(const ComplexVec &x,
                                          const ComplexVec &step);

} // namespace detail

} // namespace ccm
