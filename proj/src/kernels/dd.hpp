// SPDX-License-Identifier: Apache-2.0
//
// Error-free transformations for compensated summation (double-double
// accumulation). `two_prod` relies on a correctly rounded fma.

#pragma once

#include <cmath>

namespace ccm::kernels::dd {

struct Pair {
  double hi;
  double lo;
};

inline Pair two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline Pair two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

/// Running sum s + c with c collecting every rounding error.
struct Accumulator {
  double s = 0.0;
  double c = 0.0;

  void add(double v) {
    const Pair t = two_sum(s, v);
    s = t.hi;
    c += t.lo;
  }
  void add_product(double a, double b) {
    const Pair p = two_prod(a, b);
    add(p.hi);
    c += p.lo;
  }
  double value() const { return s + c; }
  Pair pair() const { return two_sum(s, c); }
};

} // namespace ccm::kernels::dd
