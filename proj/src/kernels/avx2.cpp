// SPDX-License-Identifier: Apache-2.0
//
// AVX2 kernels: two complex entries per 256-bit register. The translation
// unit is built with -mavx2 -mfma and -ffp-contract=off: FMA appears only
// where requested explicitly (exact product errors in quad_form), so
// element-wise results match the scalar reference.

#include "dd.hpp"
#include "kernels_impl.hpp"

#include <immintrin.h>

#include <cmath>
#include <limits>

namespace ccm::kernels::avx2 {
namespace {

// (a, b, c, d) -> (b, a, d, c)
inline __m256d swap_pairs(__m256d v) { return _mm256_permute_pd(v, 0b0101); }

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

// (even lanes sum) - (odd lanes sum)
inline double hsum_even_minus_odd(__m256d v) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, v);
  return (lanes[0] + lanes[2]) - (lanes[1] + lanes[3]);
}

inline double hmax(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d m = _mm_max_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_max_sd(m, _mm_unpackhi_pd(m, m)));
}

inline __m256d abs_pd(__m256d v) {
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

// Re{z conj(x)} broadcast into both halves of each complex slot.
inline __m256d real_inner(__m256d x, __m256d z) {
  const __m256d p = _mm256_mul_pd(z, x);
  return _mm256_add_pd(p, swap_pairs(p));
}

} // namespace

void hadamard(const double *u, const double *v, double *out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d uv = _mm256_loadu_pd(u + 2 * i);
    const __m256d vv = _mm256_loadu_pd(v + 2 * i);
    const __m256d t1 = _mm256_mul_pd(_mm256_movedup_pd(uv), vv);
    const __m256d t2 =
        _mm256_mul_pd(_mm256_permute_pd(uv, 0b1111), swap_pairs(vv));
    _mm256_storeu_pd(out + 2 * i, _mm256_addsub_pd(t1, t2));
  }
  if (i < n)
    scalar_table().hadamard(u + 2 * i, v + 2 * i, out + 2 * i, n - i);
}

void project(const double *x, const double *z, double *out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(x + 2 * i);
    const __m256d zv = _mm256_loadu_pd(z + 2 * i);
    const __m256d s = real_inner(xv, zv);
    _mm256_storeu_pd(out + 2 * i, _mm256_sub_pd(zv, _mm256_mul_pd(s, xv)));
  }
  if (i < n)
    scalar_table().project(x + 2 * i, z + 2 * i, out + 2 * i, n - i);
}

void normal(const double *x, const double *z, double *out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(x + 2 * i);
    const __m256d zv = _mm256_loadu_pd(z + 2 * i);
    _mm256_storeu_pd(out + 2 * i, _mm256_mul_pd(real_inner(xv, zv), xv));
  }
  if (i < n)
    scalar_table().normal(x + 2 * i, z + 2 * i, out + 2 * i, n - i);
}

double tangent_residual(const double *x, const double *z, std::size_t n) {
  __m256d worst = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d s =
        real_inner(_mm256_loadu_pd(x + 2 * i), _mm256_loadu_pd(z + 2 * i));
    worst = _mm256_max_pd(worst, abs_pd(s));
  }
  double result = hmax(worst);
  if (i < n)
    result = std::fmax(result, scalar_table().tangent_residual(
                                   x + 2 * i, z + 2 * i, n - i));
  return result;
}

std::complex<double> row_dot(const double *a, const double *w, std::size_t n) {
  // acc_rr = (ar wr, ai wi, ...), acc_ri = (ar wi, ai wr, ...)
  __m256d acc_rr = _mm256_setzero_pd();
  __m256d acc_ri = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d av = _mm256_loadu_pd(a + 2 * k);
    const __m256d wv = _mm256_loadu_pd(w + 2 * k);
    acc_rr = _mm256_add_pd(acc_rr, _mm256_mul_pd(av, wv));
    acc_ri = _mm256_add_pd(acc_ri, _mm256_mul_pd(av, swap_pairs(wv)));
  }
  std::complex<double> result{hsum_even_minus_odd(acc_rr), hsum(acc_ri)};
  if (k < n)
    result += scalar_table().row_dot(a + 2 * k, w + 2 * k, n - k);
  return result;
}

std::complex<double> conj_dot(const double *x, const double *y,
                              std::size_t n) {
  // acc_rr = (xr yr, xi yi, ...), acc_ri = (xr yi, xi yr, ...)
  __m256d acc_rr = _mm256_setzero_pd();
  __m256d acc_ri = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(x + 2 * i);
    const __m256d yv = _mm256_loadu_pd(y + 2 * i);
    acc_rr = _mm256_add_pd(acc_rr, _mm256_mul_pd(xv, yv));
    acc_ri = _mm256_add_pd(acc_ri, _mm256_mul_pd(xv, swap_pairs(yv)));
  }
  std::complex<double> result{hsum(acc_rr), hsum_even_minus_odd(acc_ri)};
  if (i < n)
    result += scalar_table().conj_dot(x + 2 * i, y + 2 * i, n - i);
  return result;
}

std::complex<double> quad_form(const double *a, const double *x,
                               std::size_t n) {
  dd::Accumulator f_re, f_im;
  for (std::size_t i = 0; i < n; ++i) {
    const double *row = a + 2 * n * i;
    // Lane-wise double-double sums of (ar wr, ai wi, ..) and (ar wi, ai wr, ..)
    __m256d s_rr = _mm256_setzero_pd(), c_rr = _mm256_setzero_pd();
    __m256d s_ri = _mm256_setzero_pd(), c_ri = _mm256_setzero_pd();
    auto accumulate = [](__m256d &s, __m256d &c, __m256d p, __m256d e) {
      const __m256d t = _mm256_add_pd(s, p);
      const __m256d bb = _mm256_sub_pd(t, s);
      const __m256d err = _mm256_add_pd(
          _mm256_sub_pd(s, _mm256_sub_pd(t, bb)), _mm256_sub_pd(p, bb));
      s = t;
      c = _mm256_add_pd(c, _mm256_add_pd(err, e));
    };
    std::size_t k = 0;
    for (; k + 2 <= n; k += 2) {
      const __m256d av = _mm256_loadu_pd(row + 2 * k);
      const __m256d wv = _mm256_loadu_pd(x + 2 * k);
      const __m256d ws = swap_pairs(wv);
      const __m256d p1 = _mm256_mul_pd(av, wv);
      const __m256d p2 = _mm256_mul_pd(av, ws);
      accumulate(s_rr, c_rr, p1, _mm256_fmsub_pd(av, wv, p1));
      accumulate(s_ri, c_ri, p2, _mm256_fmsub_pd(av, ws, p2));
    }
    alignas(32) double rr[4], rr_c[4], ri[4], ri_c[4];
    _mm256_store_pd(rr, s_rr);
    _mm256_store_pd(rr_c, c_rr);
    _mm256_store_pd(ri, s_ri);
    _mm256_store_pd(ri_c, c_ri);
    dd::Accumulator y_re, y_im;
    y_re.add(rr[0]);
    y_re.add(-rr[1]);
    y_re.add(rr[2]);
    y_re.add(-rr[3]);
    y_re.c += (rr_c[0] - rr_c[1]) + (rr_c[2] - rr_c[3]);
    for (int l = 0; l < 4; ++l)
      y_im.add(ri[l]);
    y_im.c += (ri_c[0] + ri_c[1]) + (ri_c[2] + ri_c[3]);
    for (; k < n; ++k) {
      const double ar = row[2 * k], ai = row[2 * k + 1];
      const double wr = x[2 * k], wi = x[2 * k + 1];
      y_re.add_product(ar, wr);
      y_re.add_product(-ai, wi);
      y_im.add_product(ar, wi);
      y_im.add_product(ai, wr);
    }
    const dd::Pair yr = y_re.pair(), yi = y_im.pair();
    const double xr = x[2 * i], xi = x[2 * i + 1];
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
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4)
    acc = _mm256_add_pd(
        acc, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  double result = hsum(acc);
  for (; i < len; ++i)
    result += a[i] * b[i];
  return result;
}

void scale(double alpha, const double *in, double *out, std::size_t len) {
  const __m256d av = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= len; i += 4)
    _mm256_storeu_pd(out + i, _mm256_mul_pd(av, _mm256_loadu_pd(in + i)));
  for (; i < len; ++i)
    out[i] = alpha * in[i];
}

double retract(const double *x, const double *xi, double *out, std::size_t n) {
  const __m256d inf = _mm256_set1_pd(std::numeric_limits<double>::infinity());
  __m256d min_mod = inf;
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const __m256d xv = _mm256_loadu_pd(x + 2 * i);
    const __m256d sv = _mm256_loadu_pd(xi + 2 * i);
    const __m256d y = _mm256_add_pd(xv, sv);
    const __m256d sq = _mm256_mul_pd(y, y);
    const __m256d m = _mm256_sqrt_pd(_mm256_add_pd(sq, swap_pairs(sq)));
    const __m256d zero = _mm256_cmp_pd(sv, _mm256_setzero_pd(), _CMP_EQ_OQ);
    const __m256d keep = _mm256_and_pd(zero, swap_pairs(zero));
    _mm256_storeu_pd(out + 2 * i,
                     _mm256_blendv_pd(_mm256_div_pd(y, m), xv, keep));
    min_mod = _mm256_min_pd(min_mod, _mm256_blendv_pd(m, inf, keep));
  }
  const __m128d lo = _mm256_castpd256_pd128(min_mod);
  const __m128d hi = _mm256_extractf128_pd(min_mod, 1);
  const __m128d mm = _mm_min_pd(lo, hi);
  double result = _mm_cvtsd_f64(_mm_min_sd(mm, _mm_unpackhi_pd(mm, mm)));
  if (i < n)
    result = std::fmin(result, scalar_table().retract(x + 2 * i, xi + 2 * i,
                                                      out + 2 * i, n - i));
  return result;
}

} // namespace ccm::kernels::avx2

namespace ccm::kernels::detail {

const KernelTable &avx2_table_unchecked() noexcept {
  static const KernelTable table{
      Backend::avx2,          "avx2",
      avx2::hadamard,         avx2::project,
      avx2::normal,           avx2::tangent_residual,
      avx2::row_dot,          avx2::conj_dot,
      avx2::quad_form,        avx2::real_dot,         avx2::scale,
      avx2::retract,
  };
  return table;
}

} // namespace ccm::kernels::detail
