// SPDX-License-Identifier: Apache-2.0

#include "ccm/manifold.hpp"

#include "ccm/cr_calculus.hpp"
#include "ccm/kernels.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

namespace ccm {
namespace {

double *as_doubles(std::vector<cplx> &v) {
  return reinterpret_cast<double *>(v.data());
}

double modulus(const cplx &c) {
  return std::sqrt(c.real() * c.real() + c.imag() * c.imag());
}

} // namespace

double tangent_tolerance(const ComplexVec &z) {
  return kTangentTol * (1.0 + inf_norm(z));
}

ManifoldPoint::ManifoldPoint(ComplexVec x) : ManifoldPoint(std::move(x), kPointTol) {}

ManifoldPoint::ManifoldPoint(ComplexVec x, double tol) : x_(std::move(x)) {
  double worst = -1.0;
  std::size_t worst_index = 0;
  for (std::size_t i = 0; i < x_.size(); ++i) {
    const double gap = std::fabs(modulus(x_[i]) - 1.0);
    if (gap > worst) {
      worst = gap;
      worst_index = i;
    }
  }
  if (worst > tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "point is off the manifold: |x[" << worst_index
        << "]| = " << modulus(x_[worst_index]) << " (tolerance " << tol << ")";
    throw ConstraintError(msg.str());
  }
}

TangentVector::TangentVector(ManifoldPoint base, ComplexVec z)
    : base_(std::move(base)), z_(std::move(z)) {
  require_same_size(base_.size(), z_.size(), "TangentVector");
  const double residual = tangent_residual(base_.vec(), z_);
  const double tol = tangent_tolerance(z_);
  if (residual > tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "vector is not tangent: max |Re{z conj(x)}| = " << residual
        << " exceeds " << tol;
    throw ConstraintError(msg.str());
  }
}

ManifoldPoint check_point(const ComplexVec &x, double tol) {
  return ManifoldPoint(x, tol);
}

ManifoldPoint random_point(std::size_t n, std::uint64_t seed) {
  if (n == 0)
    throw DimensionError("random_point: dimension must be at least 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
  std::vector<cplx> x(n);
  for (cplx &c : x) {
    const double theta = phase(rng);
    c = cplx(std::cos(theta), std::sin(theta));
  }
  return ManifoldPoint(ComplexVec(std::move(x)));
}

namespace detail {

ComplexVec project_raw(const ComplexVec &x, const ComplexVec &z) {
  require_same_size(x.size(), z.size(), "project");
  std::vector<cplx> out(z.size());
  kernels::active().project(x.interleaved().data(), z.interleaved().data(),
                            as_doubles(out), z.size());
  return ComplexVec(std::move(out));
}

ComplexVec normal_raw(const ComplexVec &x, const ComplexVec &z) {
  require_same_size(x.size(), z.size(), "normal_component");
  std::vector<cplx> out(z.size());
  kernels::active().normal(x.interleaved().data(), z.interleaved().data(),
                           as_doubles(out), z.size());
  return ComplexVec(std::move(out));
}

std::pair<ComplexVec, double> retract_raw(const ComplexVec &x,
                                          const ComplexVec &step) {
  require_same_size(x.size(), step.size(), "retract");
  std::vector<cplx> out(x.size());
  const double smallest = kernels::active().retract(
      x.interleaved().data(), step.interleaved().data(), as_doubles(out),
      x.size());
  // Checked before `out` is wrapped: a component at the origin is 0/0.
  if (!(smallest >= kRetractFloor)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "retract: |x_i + xi_i| = " << smallest
        << " is below the retraction floor; the step folds a component "
           "through the origin";
    throw NumericalError(msg.str());
  }
  return {ComplexVec(std::move(out)), smallest};
}

} // namespace detail

TangentVector project(const ManifoldPoint &x, const ComplexVec &z) {
  return TangentVector(TangentVector::trusted_t{}, x,
                       detail::project_raw(x.vec(), z));
}

NormalComponent normal_component(const ManifoldPoint &x, const ComplexVec &z) {
  return {detail::normal_raw(x.vec(), z)};
}

double tangent_residual(const ComplexVec &x, const ComplexVec &z) {
  require_same_size(x.size(), z.size(), "tangent_residual");
  return kernels::active().tangent_residual(x.interleaved().data(),
                                            z.interleaved().data(), x.size());
}

bool is_tangent(const ManifoldPoint &x, const ComplexVec &z, double tol) {
  return tangent_residual(x.vec(), z) <= tol;
}

TangentVector riemannian_gradient(const HermitianMatrix &a,
                                  const ManifoldPoint &x) {
  return project(x, euclidean_gradient(a, x.vec()));
}

TangentVector scale(double alpha, const TangentVector &xi) {
  return TangentVector(TangentVector::trusted_t{}, xi.base(),
                       scale(alpha, xi.vec()));
}

ManifoldPoint retract(const ManifoldPoint &x, const ComplexVec &step) {
  return ManifoldPoint(detail::retract_raw(x.vec(), step).first);
}

ManifoldPoint retract(const ManifoldPoint &x, const TangentVector &xi) {
  if (!(xi.base() == x))
    throw ConstraintError("retract: tangent vector is anchored elsewhere");
  return retract(x, xi.vec());
}

} // namespace ccm
