// SPDX-License-Identifier: Apache-2.0

#include "ccm/cr_calculus.hpp"

#include "ccm/kernels.hpp"

#include <cmath>
#include <sstream>

namespace ccm {
namespace {

double *as_doubles(std::vector<cplx> &v) {
  return reinterpret_cast<double *>(v.data());
}

const double *as_doubles(std::span<const cplx> v) {
  return reinterpret_cast<const double *>(v.data());
}

cplx row_product(const HermitianMatrix &a, const ComplexVec &x,
                 std::size_t m) {
  return kernels::active().row_dot(as_doubles(a.row(m)),
                                   x.interleaved().data(), x.size());
}

} // namespace

RealVec to_real(const ComplexVec &v) {
  const auto flat = v.interleaved();
  return RealVec(std::vector<double>(flat.begin(), flat.end()));
}

ComplexVec to_complex(std::span<const double> v) {
  if (v.size() % 2 != 0) {
    std::ostringstream msg;
    msg << "to_complex: real vector length " << v.size() << " is odd";
    throw DimensionError(msg.str());
  }
  std::vector<cplx> out(v.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = cplx(v[2 * i], v[2 * i + 1]);
  return ComplexVec(std::move(out));
}

double inner_real(const RealVec &v, const RealVec &w) {
  require_same_size(v.size(), w.size(), "inner_real");
  return kernels::active().real_dot(v.values().data(), w.values().data(),
                                    v.size());
}

double inner_real(const ComplexVec &v, const ComplexVec &w) {
  require_same_size(v.size(), w.size(), "inner_real");
  return kernels::active().real_dot(v.interleaved().data(),
                                    w.interleaved().data(), 2 * v.size());
}

ComplexVec hadamard(const ComplexVec &u, const ComplexVec &v) {
  require_same_size(u.size(), v.size(), "hadamard");
  std::vector<cplx> out(u.size());
  kernels::active().hadamard(u.interleaved().data(), v.interleaved().data(),
                             as_doubles(out), u.size());
  return ComplexVec(std::move(out));
}

double squared_norm(const ComplexVec &v) { return inner_real(v, v); }

double norm(const ComplexVec &v) { return std::sqrt(squared_norm(v)); }

double inf_norm(const ComplexVec &v) {
  double best = 0.0;
  for (const cplx &c : v)
    best = std::fmax(best, std::abs(c));
  return best;
}

ComplexVec scale(double alpha, const ComplexVec &v) {
  std::vector<cplx> out(v.size());
  kernels::active().scale(alpha, v.interleaved().data(), as_doubles(out),
                          2 * v.size());
  return ComplexVec(std::move(out));
}

ComplexVec add(const ComplexVec &u, const ComplexVec &v) {
  require_same_size(u.size(), v.size(), "add");
  std::vector<cplx> out(u.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = u[i] + v[i];
  return ComplexVec(std::move(out));
}

ComplexVec subtract(const ComplexVec &u, const ComplexVec &v) {
  require_same_size(u.size(), v.size(), "subtract");
  std::vector<cplx> out(u.size());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = u[i] - v[i];
  return ComplexVec(std::move(out));
}

ComplexVec multiply(const HermitianMatrix &a, const ComplexVec &x) {
  require_same_size(a.dim(), x.size(), "multiply");
  std::vector<cplx> out(x.size());
  for (std::size_t m = 0; m < out.size(); ++m)
    out[m] = row_product(a, x, m);
  return ComplexVec(std::move(out));
}

double quadratic_cost(const HermitianMatrix &a, const ComplexVec &x) {
  require_same_size(a.dim(), x.size(), "quadratic_cost");
  const cplx value = kernels::active().quad_form(
      as_doubles(a.entries()), x.interleaved().data(), x.size());
  if (std::fabs(value.imag()) > kImagTol * (1.0 + std::abs(value))) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "quadratic_cost: imaginary part " << value.imag()
        << " of x^H A x is not negligible; is A Hermitian?";
    throw NumericalError(msg.str());
  }
  return value.real();
}

double partial_derivative(const HermitianMatrix &a, const ComplexVec &x,
                          std::size_t m, Part part) {
  require_same_size(a.dim(), x.size(), "partial_derivative");
  if (m >= x.size()) {
    std::ostringstream msg;
    msg << "partial_derivative: coordinate " << m << " out of range [0, "
        << x.size() << ")";
    throw std::out_of_range(msg.str());
  }
  const cplx s = row_product(a, x, m);
  return part == Part::real ? 2.0 * s.real() : 2.0 * s.imag();
}

ComplexVec euclidean_gradient(const HermitianMatrix &a, const ComplexVec &x) {
  require_same_size(a.dim(), x.size(), "euclidean_gradient");
  std::vector<cplx> out(x.size());
  for (std::size_t m = 0; m < out.size(); ++m) {
    const cplx s = row_product(a, x, m);
    out[m] = cplx(2.0 * s.real(), 2.0 * s.imag());
  }
  return ComplexVec(std::move(out));
}

ComplexVec fd_gradient(const CostFunction &cost, const ComplexVec &x,
                       double h) {
  if (!(h > 0.0) || !std::isfinite(h))
    throw std::invalid_argument("fd_gradient: step must be positive");
  std::vector<cplx> probe = x.vector();
  auto eval = [&](std::size_t m) {
    const double value = cost(ComplexVec(probe));
    if (!std::isfinite(value)) {
      std::ostringstream msg;
      msg << "fd_gradient: cost is not finite near coordinate " << m;
      throw NumericalError(msg.str());
    }
    return value;
  };

  std::vector<cplx> out(x.size());
  for (std::size_t m = 0; m < x.size(); ++m) {
    const cplx base = x[m];
    probe[m] = base + cplx(h, 0.0);
    const double re_plus = eval(m);
    probe[m] = base - cplx(h, 0.0);
    const double re_minus = eval(m);
    probe[m] = base + cplx(0.0, h);
    const double im_plus = eval(m);
    probe[m] = base - cplx(0.0, h);
    const double im_minus = eval(m);
    probe[m] = base;
    out[m] = cplx((re_plus - re_minus) / (2.0 * h),
                  (im_plus - im_minus) / (2.0 * h));
  }
  return ComplexVec(std::move(out));
}

} // namespace ccm
