#pragma once

#include <cmath>

// Overflow-safe hyperbolic ratios used throughout the thermal formulas.
// Everything is written in terms of u = exp(-x), so the low-temperature
// regime (x of order 10^2..10^3) stays finite where naive sinh/cosh powers
// would overflow.

namespace gupho::hyp {

/// log(1 - e^{-x}) for x > 0.
inline double log1mexp(double x) { return std::log1p(-std::exp(-x)); }

/// 1 - e^{-x} without cancellation for small x.
inline double one_minus_exp(double x) { return -std::expm1(-x); }

inline double coth(double x) {
  const double u = std::exp(-x);
  return (1.0 + u * u) / (-std::expm1(-2.0 * x));
}

inline double csch(double x) {
  return 2.0 * std::exp(-x) / (-std::expm1(-2.0 * x));
}

inline double coth_half(double x) {  // coth(x/2)
  return (1.0 + std::exp(-x)) / (-std::expm1(-x));
}

inline double tanh_half(double x) {  // tanh(x/2)
  return -std::expm1(-x) / (1.0 + std::exp(-x));
}

/// e^{-x} / (1 - e^{-x})^2 = 1 / (4 sinh^2(x/2)); the Bose-type weight that
/// appears in every alpha correction. ~ 1/x^2 for small x, ~ e^{-x} for large x.
inline double bose_weight(double x) {
  const double em = std::expm1(-x);
  return std::exp(-x) / (em * em);
}

}  // namespace gupho::hyp
