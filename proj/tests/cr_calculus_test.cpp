// SPDX-License-Identifier: Apache-2.0

#include "ccm/cr_calculus.hpp"
#include "ccm/kernels.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <random>

namespace ccm {
namespace {

using testing::gaussian_hermitian;
using testing::gaussian_vec;
using testing::l2;
using testing::l2_diff;

const cplx j(0.0, 1.0);

HermitianMatrix real_matrix(std::size_t n, std::vector<double> v) {
  std::vector<cplx> e(v.begin(), v.end());
  return HermitianMatrix(n, std::move(e));
}

// --- types -----------------------------------------------------------------

TEST(Types, ComplexVecRejectsEmptyAndNonFinite) {
  EXPECT_THROW(ComplexVec(std::vector<cplx>{}), DimensionError);
  EXPECT_THROW(ComplexVec({cplx(1.0, std::nan(""))}), ConstraintError);
  EXPECT_THROW(ComplexVec({cplx(INFINITY, 0.0)}), ConstraintError);
}

TEST(Types, RealVecRejectsOddOrEmpty) {
  EXPECT_THROW(RealVec({1.0, 2.0, 3.0}), DimensionError);
  EXPECT_THROW(RealVec(std::vector<double>{}), DimensionError);
  EXPECT_THROW(RealVec({1.0, std::nan("")}), ConstraintError);
}

TEST(Types, HermitianValidation) {
  EXPECT_NO_THROW(real_matrix(2, {2, 1, 1, 2}));
  EXPECT_NO_THROW(HermitianMatrix(2, {1.0, cplx(0, 1), cplx(0, -1), 1.0}));
  // Upper/lower not conjugate.
  EXPECT_THROW(HermitianMatrix(2, {1.0, cplx(0, 1), cplx(0, 1), 1.0}),
               ConstraintError);
  // Diagonal must be real.
  EXPECT_THROW(HermitianMatrix(1, {cplx(1.0, 0.5)}), ConstraintError);
  EXPECT_THROW(HermitianMatrix(2, {1.0, 2.0, 3.0}), DimensionError);
  EXPECT_THROW(HermitianMatrix(0, {}), DimensionError);
  EXPECT_THROW(real_matrix(1, {INFINITY}), ConstraintError);
}

TEST(Types, HermitianToleranceIsRelative) {
  const double big = 1e6;
  // Asymmetry 1e-5 relative to max 1e6 is 1e-11 < 1e-10: accepted.
  EXPECT_NO_THROW(real_matrix(2, {big, 1.0, 1.0 + 1e-5, big}));
  // Same absolute asymmetry at unit scale is rejected.
  EXPECT_THROW(real_matrix(2, {1.0, 1.0, 1.0 + 1e-5, 1.0}), ConstraintError);
  // Explicit zero tolerance rejects any asymmetry.
  EXPECT_THROW(HermitianMatrix(2, {1.0, 1.0, std::nextafter(1.0, 2.0), 1.0}, 0.0),
               ConstraintError);
}

TEST(Types, HermitianErrorNamesOffendingEntry) {
  try {
    HermitianMatrix(3, {1.0, 0.0, 0.0, 0.0, 1.0, 5.0, 0.0, 4.0, 1.0});
    FAIL() << "expected ConstraintError";
  } catch (const ConstraintError &e) {
    const std::string what = e.what();
    EXPECT_TRUE(what.find("(1,2)") != std::string::npos ||
                what.find("(2,1)") != std::string::npos)
        << what;
  }
}

TEST(Types, SymmetrizeIsExplicitRepair) {
  const std::vector<cplx> b = {cplx(1, 3), cplx(2, 1), cplx(0, 1), 4.0};
  const HermitianMatrix a = HermitianMatrix::symmetrize(2, b);
  EXPECT_EQ(a(0, 0), cplx(1.0, 0.0));
  EXPECT_EQ(a(1, 1), cplx(4.0, 0.0));
  EXPECT_EQ(a(0, 1), 0.5 * (b[1] + std::conj(b[2])));
  EXPECT_EQ(a(1, 0), std::conj(a(0, 1)));
  // Exactly Hermitian: zero tolerance accepted.
  EXPECT_NO_THROW(HermitianMatrix(2, std::vector<cplx>(a.entries().begin(),
                                                       a.entries().end()),
                                  0.0));
}

// --- representations -------------------------------------------------------

TEST(ToReal, Examples) {
  EXPECT_EQ(to_real(ComplexVec{cplx(1, 0)}), (RealVec{1.0, 0.0}));
  EXPECT_EQ(to_real(ComplexVec{j, cplx(-1, 0)}), (RealVec{0.0, 1.0, -1.0, 0.0}));
}

TEST(ToComplex, Examples) {
  EXPECT_EQ(to_complex(RealVec{3.0, 4.0}), (ComplexVec{cplx(3, 4)}));
  EXPECT_EQ(to_complex(RealVec{0.0, 0.0, 0.0, 0.0}), ComplexVec::zeros(2));
  const std::vector<double> odd = {1.0, 2.0, 3.0};
  EXPECT_THROW(to_complex(std::span<const double>(odd)), DimensionError);
}

TEST(ToReal, RoundTripIsExact) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> len(1, 40);
  for (std::uint64_t t = 0; t < 100; ++t) {
    const ComplexVec v = gaussian_vec(len(rng), t);
    EXPECT_EQ(to_complex(to_real(v)), v);
    const RealVec u = to_real(gaussian_vec(len(rng), 1000 + t));
    EXPECT_EQ(to_real(to_complex(u)), u);
  }
}

TEST(InnerReal, Examples) {
  EXPECT_EQ(inner_real(RealVec{1, 0, 0, 1}, RealVec{0, 1, 1, 0}), 0.0);
  EXPECT_EQ(inner_real(RealVec{1, 1, 1, 1}, RealVec{1, 1, 1, 1}), 4.0);
  EXPECT_THROW(inner_real(RealVec{1, 1}, RealVec{1, 1, 1, 1}), DimensionError);
}

TEST(InnerReal, MatchesComplexForm) {
  for (std::size_t n : {1, 2, 7, 32}) {
    for (std::uint64_t t = 0; t < 100; ++t) {
      const ComplexVec u = gaussian_vec(n, 10 * t + n);
      const ComplexVec v = gaussian_vec(n, 10 * t + n + 5000);
      double expected = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        expected += (u[i] * std::conj(v[i])).real();
      const double got = inner_real(to_real(u), to_real(v));
      EXPECT_LE(std::fabs(got - expected), 1e-12 * l2(u) * l2(v));
      EXPECT_EQ(got, inner_real(u, v));
      // Symmetric.
      EXPECT_EQ(got, inner_real(to_real(v), to_real(u)));
    }
  }
}

TEST(InnerReal, Bilinear) {
  const ComplexVec u = gaussian_vec(6, 1), v = gaussian_vec(6, 2),
                   w = gaussian_vec(6, 3);
  const double a = 1.7, b = -0.3;
  const double lhs = inner_real(add(scale(a, u), scale(b, v)), w);
  const double rhs = a * inner_real(u, w) + b * inner_real(v, w);
  EXPECT_NEAR(lhs, rhs, 1e-13 * (1.0 + std::fabs(rhs)));
}

TEST(Hadamard, Examples) {
  EXPECT_EQ(hadamard(ComplexVec{cplx(1, 1)}, ComplexVec{cplx(1, -1)}),
            (ComplexVec{cplx(2, 0)}));
  EXPECT_EQ(hadamard(ComplexVec{j, 2.0}, ComplexVec{j, 3.0}),
            (ComplexVec{cplx(-1, 0), cplx(6, 0)}));
  const ComplexVec u = gaussian_vec(9, 4);
  EXPECT_EQ(hadamard(u, ComplexVec::ones(9)), u);
  EXPECT_THROW(hadamard(u, ComplexVec::ones(8)), DimensionError);
}

TEST(VectorOps, Norms) {
  const ComplexVec v{cplx(3, 4), cplx(0, -12)};
  EXPECT_DOUBLE_EQ(squared_norm(v), 169.0);
  EXPECT_DOUBLE_EQ(norm(v), 13.0);
  EXPECT_DOUBLE_EQ(inf_norm(v), 12.0);
  EXPECT_EQ(subtract(add(v, v), v), v);
  EXPECT_THROW(add(v, ComplexVec::ones(3)), DimensionError);
}

// --- quadratic form --------------------------------------------------------

TEST(QuadraticCost, Examples) {
  EXPECT_EQ(quadratic_cost(HermitianMatrix::identity(2), ComplexVec{1.0, j}), 2.0);
  EXPECT_EQ(quadratic_cost(real_matrix(2, {1, -1, -1, 1}), ComplexVec{1.0, 1.0}),
            0.0);
  // conj(x)^T A x = 2 + 1 + 1 + 2.
  EXPECT_EQ(quadratic_cost(real_matrix(2, {2, 1, 1, 2}), ComplexVec{1.0, 1.0}),
            6.0);
  EXPECT_THROW(quadratic_cost(HermitianMatrix::identity(2), ComplexVec{1.0}),
               DimensionError);
}

TEST(QuadraticCost, MatchesExtendedPrecisionReference) {
  for (std::size_t n : {1, 2, 5, 16}) {
    for (std::uint64_t t = 0; t < 10; ++t) {
      const HermitianMatrix a = gaussian_hermitian(n, 100 * n + t);
      const ComplexVec x = gaussian_vec(n, 7 * t + n);
      const auto ref = testing::reference_form(a, x);
      EXPECT_LE(std::fabs(static_cast<double>(ref.imag())),
                kImagTol * (1.0 + std::abs(static_cast<double>(ref.real()))));
      EXPECT_NEAR(quadratic_cost(a, x), static_cast<double>(ref.real()),
                  1e-13 * (1.0 + std::fabs(static_cast<double>(ref.real()))));
    }
  }
}

TEST(QuadraticCost, NonHermitianSurfacesAsImaginaryPart) {
  // Accepted with a loose tolerance, then caught by the realness assertion.
  const HermitianMatrix a(2, {1.0, j, j, 1.0}, 10.0);
  EXPECT_THROW(quadratic_cost(a, ComplexVec{1.0, 1.0}), NumericalError);
}

TEST(QuadraticCost, PhaseInvariant) {
  const HermitianMatrix a = gaussian_hermitian(6, 3);
  const ComplexVec x = testing::unit_phases(6, 4);
  const double f = quadratic_cost(a, x);
  std::vector<cplx> rotated = x.vector();
  for (cplx &c : rotated)
    c *= std::polar(1.0, 0.731);
  EXPECT_NEAR(quadratic_cost(a, ComplexVec(rotated)), f, 1e-12 * (1.0 + std::fabs(f)));
}

// --- derivatives -----------------------------------------------------------

TEST(PartialDerivative, Examples) {
  const HermitianMatrix eye = HermitianMatrix::identity(2);
  const ComplexVec x{1.0, j};
  EXPECT_EQ(partial_derivative(eye, x, 0, Part::real), 2.0);
  EXPECT_EQ(partial_derivative(eye, x, 1, Part::imag), 2.0);
  EXPECT_EQ(partial_derivative(eye, x, 0, Part::imag), 0.0);
  EXPECT_EQ(partial_derivative(eye, x, 1, Part::real), 0.0);
  EXPECT_THROW(partial_derivative(eye, x, 2, Part::real), std::out_of_range);
}

TEST(PartialDerivative, MatchesFiniteDifferences) {
  const HermitianMatrix a = gaussian_hermitian(4, 77);
  const ComplexVec x = gaussian_vec(4, 78);
  const ComplexVec fd =
      fd_gradient([&](const ComplexVec &v) { return quadratic_cost(a, v); }, x);
  for (std::size_t m = 0; m < 4; ++m) {
    const double re = partial_derivative(a, x, m, Part::real);
    const double im = partial_derivative(a, x, m, Part::imag);
    EXPECT_LE(std::fabs(re - fd[m].real()), 1e-6 * (1.0 + std::fabs(re)));
    EXPECT_LE(std::fabs(im - fd[m].imag()), 1e-6 * (1.0 + std::fabs(im)));
  }
}

TEST(EuclideanGradient, Examples) {
  const ComplexVec x = gaussian_vec(5, 3);
  EXPECT_EQ(euclidean_gradient(HermitianMatrix::identity(5), x), scale(2.0, x));
  const ComplexVec g =
      euclidean_gradient(real_matrix(2, {2, 1, 1, 2}), ComplexVec{1.0, 1.0});
  EXPECT_EQ(g, (ComplexVec{6.0, 6.0}));
  EXPECT_THROW(euclidean_gradient(HermitianMatrix::identity(2), x), DimensionError);
}

TEST(EuclideanGradient, ConsistentWithPartials) {
  for (std::size_t n : {1, 2, 5, 16}) {
    for (std::uint64_t t = 0; t < 10; ++t) {
      const HermitianMatrix a = gaussian_hermitian(n, 31 * n + t);
      const ComplexVec x = gaussian_vec(n, 37 * n + t);
      const ComplexVec g = euclidean_gradient(a, x);
      for (std::size_t m = 0; m < n; ++m) {
        const cplx p(partial_derivative(a, x, m, Part::real),
                     partial_derivative(a, x, m, Part::imag));
        EXPECT_LE(std::abs(g[m] - p), 1e-12 * (1.0 + std::abs(g[m])));
      }
    }
  }
}

TEST(EuclideanGradient, IsTwiceMatrixVectorProduct) {
  const HermitianMatrix a = gaussian_hermitian(7, 5);
  const ComplexVec x = gaussian_vec(7, 6);
  const ComplexVec g = euclidean_gradient(a, x);
  for (std::size_t m = 0; m < 7; ++m) {
    std::complex<long double> acc = 0.0L;
    for (std::size_t k = 0; k < 7; ++k)
      acc += std::complex<long double>(a(m, k).real(), a(m, k).imag()) *
             std::complex<long double>(x[k].real(), x[k].imag());
    const cplx ref(static_cast<double>(2.0L * acc.real()),
                   static_cast<double>(2.0L * acc.imag()));
    EXPECT_LE(std::abs(g[m] - ref), 1e-13 * (1.0 + std::abs(ref)));
  }
  EXPECT_LE(l2_diff(g, scale(2.0, multiply(a, x))), 1e-13 * (1.0 + l2(g)));
}

TEST(EuclideanGradient, MatchesFiniteDifferenceOracle) {
  for (std::size_t n : {1, 2, 5, 16}) {
    for (std::uint64_t t = 0; t < 10; ++t) {
      const HermitianMatrix a = gaussian_hermitian(n, 1000 + 13 * n + t);
      const ComplexVec x = gaussian_vec(n, 2000 + 17 * n + t);
      const ComplexVec g = euclidean_gradient(a, x);
      const ComplexVec fd = fd_gradient(
          [&](const ComplexVec &v) { return quadratic_cost(a, v); }, x, 1e-6);
      EXPECT_LE(l2_diff(g, fd) / (1.0 + l2(g)), 1e-6) << "n=" << n;
    }
  }
}

// --- finite differences ----------------------------------------------------

TEST(FdGradient, SquaredNormGivesTwoX) {
  const ComplexVec x = gaussian_vec(6, 8);
  const ComplexVec fd = fd_gradient([](const ComplexVec &v) { return squared_norm(v); }, x);
  EXPECT_LE(l2_diff(fd, scale(2.0, x)), 1e-8);
}

TEST(FdGradient, ConstantGivesZero) {
  const ComplexVec fd =
      fd_gradient([](const ComplexVec &) { return 3.25; }, gaussian_vec(4, 1));
  EXPECT_EQ(fd, ComplexVec::zeros(4));
}

TEST(FdGradient, ConventionIsRealPlusJImag) {
  // f = Im(w) has d/dx^1 = 0, d/dx^2 = 1, so d/dw = j.
  const ComplexVec fd = fd_gradient(
      [](const ComplexVec &v) { return v[0].imag(); }, ComplexVec{cplx(0.3, 0.4)});
  EXPECT_NEAR(fd[0].real(), 0.0, 1e-9);
  EXPECT_NEAR(fd[0].imag(), 1.0, 1e-9);
}

TEST(FdGradient, Errors) {
  const ComplexVec x = gaussian_vec(2, 1);
  EXPECT_THROW(fd_gradient([](const ComplexVec &) { return NAN; }, x),
               NumericalError);
  EXPECT_THROW(fd_gradient([](const ComplexVec &) { return 1.0; }, x, 0.0),
               std::invalid_argument);
}

TEST(Backends, CalculusAgreesAcrossBackends) {
  if (kernels::avx2_table() == nullptr)
    GTEST_SKIP() << "AVX2 backend not available";
  const HermitianMatrix a = gaussian_hermitian(13, 9);
  const ComplexVec x = gaussian_vec(13, 10);
  const kernels::Backend initial = kernels::active().backend;
  kernels::select_backend(kernels::Backend::scalar);
  const double f_scalar = quadratic_cost(a, x);
  const ComplexVec g_scalar = euclidean_gradient(a, x);
  kernels::select_backend(kernels::Backend::avx2);
  const double f_avx = quadratic_cost(a, x);
  const ComplexVec g_avx = euclidean_gradient(a, x);
  kernels::select_backend(initial);
  EXPECT_NEAR(f_scalar, f_avx, 4e-16 * (1.0 + std::fabs(f_scalar)));
  EXPECT_LE(l2_diff(g_scalar, g_avx), 1e-13 * (1.0 + l2(g_scalar)));
}

} // namespace
} // namespace ccm
