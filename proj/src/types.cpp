// SPDX-License-Identifier: Apache-2.0

#include "ccm/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ccm {
namespace {

bool is_finite(const cplx &c) {
  return std::isfinite(c.real()) && std::isfinite(c.imag());
}

} // namespace

void require_same_size(std::size_t a, std::size_t b, const char *what) {
  if (a != b) {
    std::ostringstream msg;
    msg << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw DimensionError(msg.str());
  }
}

ComplexVec::ComplexVec(std::vector<cplx> entries) : data_(std::move(entries)) {
  if (data_.empty())
    throw DimensionError("ComplexVec: length must be at least 1");
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!is_finite(data_[i])) {
      std::ostringstream msg;
      msg << "ComplexVec: entry " << i << " is not finite";
      throw ConstraintError(msg.str());
    }
  }
}

ComplexVec ComplexVec::zeros(std::size_t n) {
  return ComplexVec(std::vector<cplx>(n, cplx(0.0, 0.0)));
}

ComplexVec ComplexVec::ones(std::size_t n) {
  return ComplexVec(std::vector<cplx>(n, cplx(1.0, 0.0)));
}

std::span<const double> ComplexVec::interleaved() const noexcept {
  // std::complex<double> is array-compatible with double[2].
  return {reinterpret_cast<const double *>(data_.data()), 2 * data_.size()};
}

RealVec::RealVec(std::vector<double> entries) : data_(std::move(entries)) {
  if (data_.size() < 2 || data_.size() % 2 != 0) {
    std::ostringstream msg;
    msg << "RealVec: length must be even and >= 2, got " << data_.size();
    throw DimensionError(msg.str());
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!std::isfinite(data_[i])) {
      std::ostringstream msg;
      msg << "RealVec: entry " << i << " is not finite";
      throw ConstraintError(msg.str());
    }
  }
}

double HermitianMatrix::default_tolerance(std::span<const cplx> entries) {
  double biggest = 0.0;
  for (const cplx &c : entries)
    biggest = std::max(biggest, std::abs(c));
  return 1e-10 * biggest;
}

HermitianMatrix::HermitianMatrix(std::size_t n, std::vector<cplx> entries)
    : HermitianMatrix(n, entries, default_tolerance(entries)) {}

HermitianMatrix::HermitianMatrix(std::size_t n, std::vector<cplx> entries,
                                 double tol)
    : n_(n), data_(std::move(entries)) {
  if (n_ == 0)
    throw DimensionError("HermitianMatrix: dimension must be at least 1");
  if (data_.size() != n_ * n_) {
    std::ostringstream msg;
    msg << "HermitianMatrix: expected " << n_ * n_ << " entries for n = " << n_
        << ", got " << data_.size();
    throw DimensionError(msg.str());
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!is_finite(data_[i])) {
      std::ostringstream msg;
      msg << "HermitianMatrix: entry (" << i / n_ << ", " << i % n_
          << ") is not finite";
      throw ConstraintError(msg.str());
    }
  }
  double worst = -1.0;
  std::size_t wi = 0, wk = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t k = i; k < n_; ++k) {
      const double gap =
          std::abs((*this)(i, k) - std::conj((*this)(k, i)));
      if (gap > worst) {
        worst = gap;
        wi = i;
        wk = k;
      }
    }
  }
  if (worst > tol) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "HermitianMatrix: not Hermitian, |a(" << wi << "," << wk
        << ") - conj(a(" << wk << "," << wi << "))| = " << worst
        << " exceeds tolerance " << tol;
    throw ConstraintError(msg.str());
  }
}

HermitianMatrix HermitianMatrix::symmetrize(std::size_t n,
                                            const std::vector<cplx> &entries) {
  if (n == 0 || entries.size() != n * n)
    throw DimensionError("HermitianMatrix::symmetrize: expected n*n entries");
  std::vector<cplx> out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i * n + i] = cplx(entries[i * n + i].real(), 0.0);
    for (std::size_t k = i + 1; k < n; ++k) {
      const cplx upper =
          0.5 * (entries[i * n + k] + std::conj(entries[k * n + i]));
      out[i * n + k] = upper;
      out[k * n + i] = std::conj(upper);
    }
  }
  return HermitianMatrix(n, std::move(out), 0.0);
}

HermitianMatrix HermitianMatrix::identity(std::size_t n) {
  std::vector<cplx> out(n * n, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    out[i * n + i] = 1.0;
  return HermitianMatrix(n, std::move(out), 0.0);
}

double HermitianMatrix::row_inf_norm() const {
  double best = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    double sum = 0.0;
    for (const cplx &c : row(i))
      sum += std::abs(c);
    best = std::max(best, sum);
  }
  return best;
}

} // namespace ccm
