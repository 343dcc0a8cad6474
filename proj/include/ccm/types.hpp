// SPDX-License-Identifier: Apache-2.0
//
// Core value types shared by every ccm module: complex/real vectors, the
// Hermitian cost matrix, and the error hierarchy.

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccm {

using cplx = std::complex<double>;

/// Raised when operand sizes disagree or a dimension is invalid.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a value violates a domain invariant (finiteness, Hermitian
/// symmetry, unit modulus, tangency).
class ConstraintError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a numerical procedure cannot produce a trustworthy result.
class NumericalError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Ordered sequence of n >= 1 finite complex scalars.
///
/// Storage is std::complex<double>, which is laid out as (re, im) pairs; the
/// interleaved real view returned by `interleaved()` therefore coincides
/// with the RealVec layout (x1^1, x1^2, ..., xn^1, xn^2).
class ComplexVec {
public:
  explicit ComplexVec(std::vector<cplx> entries);
  ComplexVec(std::initializer_list<cplx> entries)
      : ComplexVec(std::vector<cplx>(entries)) {}

  static ComplexVec zeros(std::size_t n);
  static ComplexVec ones(std::size_t n);

  std::size_t size() const noexcept { return data_.size(); }
  const cplx &operator[](std::size_t i) const { return data_[i]; }
  std::span<const cplx> values() const noexcept { return data_; }
  std::span<const double> interleaved() const noexcept;
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }

  const std::vector<cplx> &vector() const noexcept { return data_; }

  friend bool operator==(const ComplexVec &, const ComplexVec &) = default;

private:
  std::vector<cplx> data_;
};

/// Ordered sequence of 2n finite reals, interleaved (re, im) per coordinate.
class RealVec {
public:
  explicit RealVec(std::vector<double> entries);
  RealVec(std::initializer_list<double> entries)
      : RealVec(std::vector<double>(entries)) {}

  std::size_t size() const noexcept { return data_.size(); }
  const double &operator[](std::size_t i) const { return data_[i]; }
  std::span<const double> values() const noexcept { return data_; }
  auto begin() const noexcept { return data_.begin(); }
  auto end() const noexcept { return data_.end(); }

  friend bool operator==(const RealVec &, const RealVec &) = default;

private:
  std::vector<double> data_;
};

/// Square complex matrix with a_ik = conj(a_ki), stored row-major.
class HermitianMatrix {
public:
  /// Validates symmetry against `1e-10 * max|a_ik|`.
  HermitianMatrix(std::size_t n, std::vector<cplx> entries);

  /// Validates symmetry against an explicit absolute tolerance.
  HermitianMatrix(std::size_t n, std::vector<cplx> entries, double tol);

  /// Explicit repair: returns (B + B^H)/2. Never applied implicitly.
  static HermitianMatrix symmetrize(std::size_t n,
                                    const std::vector<cplx> &entries);

  static HermitianMatrix identity(std::size_t n);

  /// Tolerance used by the two-argument constructor.
  static double default_tolerance(std::span<const cplx> entries);

  std::size_t dim() const noexcept { return n_; }
  const cplx &operator()(std::size_t i, std::size_t k) const {
    return data_[i * n_ + k];
  }
  std::span<const cplx> row(std::size_t i) const {
    return std::span<const cplx>(data_).subspan(i * n_, n_);
  }
  std::span<const cplx> entries() const noexcept { return data_; }

  /// max_i sum_k |a_ik|
  double row_inf_norm() const;

  friend bool operator==(const HermitianMatrix &,
                         const HermitianMatrix &) = default;

private:
  std::size_t n_;
  std::vector<cplx> data_;
};

/// Throws DimensionError unless `a == b`; `what` names the operation.
void require_same_size(std::size_t a, std::size_t b, const char *what);

} // namespace ccm
