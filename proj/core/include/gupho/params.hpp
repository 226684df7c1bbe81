#pragma once

#include <cmath>

#include "gupho/errors.hpp"

namespace gupho {

/**
 * Physical constants of the oscillator plus the minimal-length coupling alpha.
 *
 * alpha has dimension (momentum)^-2 and is treated strictly to first order.
 * alpha = 0 recovers the ordinary harmonic oscillator. Quantities carrying a
 * first-order correction report a validity ratio |correction| / |base| so the
 * caller can judge where the expansion stops being meaningful; the library
 * itself never enforces an alpha bound.
 */
struct GupParams {
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;
  double kb = 1.0;
  double alpha = 0.0;

  void validate() const {
    if (!(hbar > 0.0) || !(mass > 0.0) || !(omega > 0.0) || !(kb > 0.0))
      throw DomainError("GupParams: hbar, mass, omega, kb must be positive");
    if (!(alpha >= 0.0)) throw DomainError("GupParams: alpha must be >= 0");
  }

  /// Dimensionless inverse temperature x = hbar * omega * beta.
  double x_of_beta(double beta) const { return hbar * omega * beta; }

  double beta_of_temperature(double temperature) const {
    if (!(temperature > 0.0)) throw DomainError("temperature must be positive");
    return 1.0 / (kb * temperature);
  }

  double x_of_temperature(double temperature) const {
    return x_of_beta(beta_of_temperature(temperature));
  }

  /// The combination hbar * m * omega that multiplies every alpha correction.
  double hmw() const { return hbar * mass * omega; }
};

/// Squared minimal position uncertainty, 3 * alpha * hbar^2.
inline double minimal_length_sq(const GupParams& p) {
  p.validate();
  return 3.0 * p.alpha * p.hbar * p.hbar;
}

/// Value of a first-order quantity split into its alpha = 0 part and the
/// full (signed) correction term.
struct FirstOrder {
  double base = 0.0;
  double correction = 0.0;

  double value() const { return base + correction; }

  /// |correction| / |base|; 0 when the base vanishes together with the correction.
  double validity_ratio() const {
    if (correction == 0.0) return 0.0;
    return std::abs(correction) / std::abs(base);
  }
};

}  // namespace gupho
