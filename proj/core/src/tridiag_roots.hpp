#pragma once

#include <cmath>

#include "gupho/determinants.hpp"

// Internal helper shared by the determinant and moment closed forms.

namespace gupho::detail {

// Split roots of the characteristic quadratic t^2 - 2a t + b^2:
// s = sqrt(a+b) + sqrt(a-b) and d = sqrt(a+b) - sqrt(a-b), with s*d = 2b.
// d is evaluated as 2b/s (no subtraction), and s - d as
// 2(a - b + sqrt(a^2-b^2))/s, so both the a ~ b and the a >> b regime come
// out of sums of positives.
struct Roots {
  double s;     // sqrt(a+b) + sqrt(a-b)
  double d;     // sqrt(a+b) - sqrt(a-b), computed as 2b/s
  double diff;  // s - d
  double root;  // sqrt(a^2 - b^2)
};

inline Roots split_roots(const AbPair& ab) {
  const double sp = std::sqrt(ab.a + ab.b);
  const double sm = std::sqrt(ab.a - ab.b);
  Roots r;
  r.s = sp + sm;
  r.d = 2.0 * ab.b / r.s;
  r.root = sp * sm;
  r.diff = 2.0 * (ab.a - ab.b + r.root) / r.s;
  return r;
}

// s^k - d^k = (s - d) * sum_{j=0}^{k-1} s^j d^{k-1-j}; cancellation-free.
inline double power_diff(const Roots& r, int k) {
  if (k <= 0) return 0.0;
  double sum = 0.0;
  double term = std::pow(r.s, k - 1);
  const double ratio = r.d / r.s;
  for (int j = 0; j < k; ++j) {
    sum += term;
    term *= ratio;
  }
  return r.diff * sum;
}

inline double power_sum(const Roots& r, int k) {
  return std::pow(r.s, k) + std::pow(r.d, k);
}

}  // namespace gupho::detail
