// SPDX-License-Identifier: Apache-2.0
//
// Data-parallel inner loops behind the cr_calculus and manifold modules.
//
// Every kernel works on complex vectors stored as interleaved doubles
// (re0, im0, re1, im1, ...), `n` counting complex entries. Two backends are
// provided: a portable scalar reference and an AVX2 variant. The active
// backend is picked once at startup from the CPU's capabilities and can be
// overridden with `select_backend` (tests use this to compare the two).
//
// Element-wise kernels are bit-identical across backends (no FMA, same
// operation order per element). Reductions differ only in summation order.
// The AVX2 backend also requires FMA, which the compensated quadratic form
// uses for exact product errors.

#pragma once

#include <complex>
#include <cstddef>
#include <string_view>

namespace ccm::kernels {

enum class Backend { scalar, avx2 };

struct KernelTable {
  Backend backend;
  std::string_view name;

  /// out_i = u_i * v_i
  void (*hadamard)(const double *u, const double *v, double *out,
                   std::size_t n);
  /// out_i = z_i - Re{z_i conj(x_i)} x_i
  void (*project)(const double *x, const double *z, double *out,
                  std::size_t n);
  /// out_i = Re{z_i conj(x_i)} x_i
  void (*normal)(const double *x, const double *z, double *out,
                 std::size_t n);
  /// max_i |Re{z_i conj(x_i)}|
  double (*tangent_residual)(const double *x, const double *z, std::size_t n);
  /// sum_k a_k w_k (complex)
  std::complex<double> (*row_dot)(const double *a, const double *w,
                                  std::size_t n);
  /// sum_i conj(x_i) y_i (complex)
  std::complex<double> (*conj_dot)(const double *x, const double *y,
                                   std::size_t n);
  /// x^H A x for a row-major n x n matrix A, accumulated in double-double
  /// so the result is accurate to a few ulps of |x^H A x| even under heavy
  /// cancellation.
  std::complex<double> (*quad_form)(const double *a, const double *x,
                                    std::size_t n);
  /// sum_i a_i b_i over `len` reals
  double (*real_dot)(const double *a, const double *b, std::size_t len);
  /// out_i = alpha * in_i over `len` reals
  void (*scale)(double alpha, const double *in, double *out, std::size_t len);
  /// out_i = (x_i + xi_i) / |x_i + xi_i|, out_i = x_i where xi_i == 0.
  /// Returns min_i |x_i + xi_i| over the components that were normalized
  /// (+inf when none were).
  double (*retract)(const double *x, const double *xi, double *out,
                    std::size_t n);
};

const KernelTable &scalar_table() noexcept;

/// nullptr when the binary was built without AVX2 support or the CPU lacks it.
const KernelTable *avx2_table() noexcept;

/// Table used by the library. Defaults to the best supported backend.
const KernelTable &active() noexcept;

/// Forces a backend process-wide. Throws std::runtime_error if unavailable.
void select_backend(Backend b);

/// Best backend the running CPU supports.
Backend best_backend() noexcept;

} // namespace ccm::kernels
