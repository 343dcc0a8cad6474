// SPDX-License-Identifier: Apache-2.0
//
// Real/complex vector representations and the calculus of the Hermitian
// quadratic cost f(x) = x^H A x.
//
// Complex partial derivatives follow the convention
//
//     d/dw_m := d/dx_m^1 + j d/dx_m^2
//
// where w_m = x_m^1 + j x_m^2. For a real-valued f this is twice the
// conjugate Wirtinger derivative, which is why the gradient of x^H A x comes
// out as 2 A x rather than A x. `fd_gradient` uses the same convention.

#pragma once

#include "ccm/types.hpp"

#include <cstddef>
#include <functional>

namespace ccm {

/// Default central-difference step.
inline constexpr double kFdStep = 1e-6;

/// Im(x^H A x) must satisfy |Im| <= kImagTol * (1 + |x^H A x|).
inline constexpr double kImagTol = 1e-10;

enum class Part { real = 1, imag = 2 };

RealVec to_real(const ComplexVec &v);

/// Throws DimensionError on odd length.
ComplexVec to_complex(std::span<const double> v);
inline ComplexVec to_complex(const RealVec &v) {
  return to_complex(v.values());
}

/// sum_i v_i w_i over all 2n real coordinates.
double inner_real(const RealVec &v, const RealVec &w);

/// The same inner product evaluated on complex forms: Re{sum_i v_i conj(w_i)}.
double inner_real(const ComplexVec &v, const ComplexVec &w);

ComplexVec hadamard(const ComplexVec &u, const ComplexVec &v);

double squared_norm(const ComplexVec &v);
double norm(const ComplexVec &v);
double inf_norm(const ComplexVec &v);

ComplexVec scale(double alpha, const ComplexVec &v);
ComplexVec add(const ComplexVec &u, const ComplexVec &v);
ComplexVec subtract(const ComplexVec &u, const ComplexVec &v);

/// A x
ComplexVec multiply(const HermitianMatrix &a, const ComplexVec &x);

/// Re(x^H A x). Throws NumericalError if the imaginary part exceeds
/// kImagTol * (1 + |x^H A x|).
double quadratic_cost(const HermitianMatrix &a, const ComplexVec &x);

/// d f / d x_m^l for f = x^H A x: 2 Re{sum_k a_mk w_k} (real part) or
/// 2 Im{sum_k a_mk w_k} (imaginary part). `m` is zero-based.
double partial_derivative(const HermitianMatrix &a, const ComplexVec &x,
                          std::size_t m, Part part);

/// 2 A x
ComplexVec euclidean_gradient(const HermitianMatrix &a, const ComplexVec &x);

using CostFunction = std::function<double(const ComplexVec &)>;

/// Central differences on the real and imaginary part of every coordinate,
/// combined as d/dx^1 + j d/dx^2. Throws NumericalError if any evaluated
/// cost is not finite.
ComplexVec fd_gradient(const CostFunction &cost, const ComplexVec &x,
                       double h = kFdStep);

} // namespace ccm
