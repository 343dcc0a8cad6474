// SPDX-License-Identifier: Apache-2.0
//
// Portable reference kernels. The AVX2 variants must reproduce these
// element-wise results bit for bit.

#include "dd.hpp"
#include "kernels_impl.hpp"

#include <cmath>
#include <limits>

namespace ccm::kernels::scalar {

void hadamard(const double *u, const double *v, double *out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double ur = u[2 * i], ui = u[2 * i + 1];
    const double vr = v[2 * i], vi = v[2 * i + 1];
    out[2 * i] = ur * vr - ui * vi;
    out[2 * i + 1] = ur * vi + ui * vr;
  }
}

void project(const double *x, const double *z, double *out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    const double zr = z[2 * i], zi = z[2 * i + 1];
    const double s = zr * xr + zi * xi;
    out[2 * i] = zr - s * xr;
    out[2 * i + 1] = zi - s * xi;
  }
}

void normal(const double *x, const double *z, double *out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    const double s = z[2 * i] * xr + z[2 * i + 1] * xi;
    out[2 * i] = s * xr;
    out[2 * i + 1] = s * xi;
  }
}

double tangent_residual(const double *x, const double *z, std::size_t n) {
  double worst = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double s = z[2 * i] * x[2 * i] + z[2 * i + 1] * x[2 * i + 1];
    worst = std::fmax(worst, std::fabs(s));
  }
  return worst;
}

std::complex<double> row_dot(const double *a, const double *w, std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double ar = a[2 * k], ai = a[2 * k + 1];
    const double wr = w[2 * k], wi = w[2 * k + 1];
    re += ar * wr - ai * wi;
    im += ar * wi + ai * wr;
  }
  return {re, im};
}

std::complex<double> conj_dot(const double *x, const double *y,
                              std::size_t n) {
  double re = 0.0, im = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double xr = x[2 * i], xi = x[2 * i + 1];
    const double yr = y[2 * i], yi = y[2 * i + 1];
    re += xr * yr + xi * yi;
    im += xr * yi - xi * yr;
  }
  return {re, im};
}

std::complex<double> quad_form(const double *a, const double *x,
                               std::size_t n) {
  dd::Accumulator f_re, f_im;
  for (std::size_t i = 0; i < n; ++i) {
    // y_i = sum_k a_ik x_k, kept as hi + lo
    dd::Accumulator y_re, y_im;
    const double *row = a + 2 * n * i;
    for (std::size_t k = 0; k < n; ++k) {
      const double ar = row[2 * k], ai = row[2 * k + 1];
      const double wr = x[2 * k], wi = x[2 * k + 1];
      y_re.add_product(ar, wr);
      y_re.add_product(-ai, wi);
      y_im.add_product(ar, wi);
      y_im.add_product(ai, wr);
    }
    const dd::Pair yr = y_re.pair(), yi = y_im.pair();
    const double xr = x[2 * i], xi = x[2 * i + 1];
    // conj(x_i) y_i
    f_re.add_product(xr, yr.hi);
    f_re.add_product(xi, yi.hi);
    f_re.c += xr * yr.lo + xi * yi.lo;
    f_im.add_product(xr, yi.hi);
    f_im.add_product(-xi, yr.hi);
    f_im.c += xr * yi.lo - xi * yr.lo;
  }
  return {f_re.value(), f_im.value()};
}

double real_dot(const double *a, const double *b, std::size_t len) {
  double acc = 0.0;
  for (std::size_t i = 0; i < len; ++i)
    acc += a[i] * b[i];
  return acc;
}

void scale(double alpha, const double *in, double *out, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i)
    out[i] = alpha * in[i];
}

double retract(const double *x, const double *xi, double *out, std::size_t n) {
  double min_mod = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    if (xi[2 * i] == 0.0 && xi[2 * i + 1] == 0.0) {
      out[2 * i] = x[2 * i];
      out[2 * i + 1] = x[2 * i + 1];
      continue;
    }
    const double yr = x[2 * i] + xi[2 * i];
    const double yi = x[2 * i + 1] + xi[2 * i + 1];
    const double m = std::sqrt(yr * yr + yi * yi);
    min_mod = std::fmin(min_mod, m);
    out[2 * i] = yr / m;
    out[2 * i + 1] = yi / m;
  }
  return min_mod;
}

} // namespace ccm::kernels::scalar

namespace ccm::kernels {

const KernelTable &scalar_table() noexcept {
  static const KernelTable table{
      Backend::scalar,          "scalar",
      scalar::hadamard,         scalar::project,
      scalar::normal,           scalar::tangent_residual,
      scalar::row_dot,          scalar::conj_dot,
      scalar::quad_form,        scalar::real_dot,         scalar::scale,
      scalar::retract,
  };
  return table;
}

} // namespace ccm::kernels
