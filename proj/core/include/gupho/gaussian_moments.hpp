#pragma once

#include <span>
#include <utility>

#include "gupho/determinants.hpp"

namespace gupho {

enum class MomentKind {
  norm,                // integral of 1
  sum_sq,              // sum_i x_i^2
  cyclic_cross,        // sum_i x_i x_{i+1} (cyclic)
  sum_quartic,         // sum_i x_i^4
  cyclic_sq_sq,        // sum_i x_i^2 x_{i+1}^2 (cyclic)
  cyclic_cubic_cross,  // sum_i x_i x_{i+1} (x_i^2 + x_{i+1}^2) (cyclic)
};

struct MomentResult {
  double value;
  int n;
  MomentKind kind;
};

// Closed-form Gaussian integrals of the listed polynomials against
// exp(-X G_n X^T). Each one is verified against the Wick oracle below.

/// Normalization g_n = pi^{n/2} / sqrt(det G_n), n >= 1.
double g_norm(const AbPair& ab, int n);

/// Integral of sum_i x_i^2, n >= 2. Equals -(1/2) d g_n / da.
double moment_sum_sq(const AbPair& ab, int n);

/// Integral of the cyclic cross sum, n >= 2. Equals (1/2) d g_n / db.
double moment_cyclic_cross(const AbPair& ab, int n);

/// Integral of sum_i x_i^4, n >= 2.
double moment_sum_quartic(const AbPair& ab, int n);

/// Integral of the cyclic x_i^2 x_{i+1}^2 sum, n >= 3.
double moment_cyclic_sq_sq(const AbPair& ab, int n);

/// Integral of the cyclic x_i x_{i+1} (x_i^2 + x_{i+1}^2) sum, n >= 3.
double moment_cyclic_cubic_cross(const AbPair& ab, int n);

/// Dispatcher returning the tagged result.
MomentResult moment(const AbPair& ab, int n, MomentKind kind);

/// One factor of a monomial: (zero-based index, power).
using MonomialFactor = std::pair<int, int>;

/**
 * Wick/Isserlis oracle: the integral of the given monomial against
 * exp(-X G_n X^T), computed as g_n times the pairing sum over the covariance
 * (1/2) G_n^{-1} (inverse via the dense LU machinery). Supports total power
 * up to 4. Odd total power returns 0 by parity.
 */
double wick_moment(const AbPair& ab, int n, std::span<const MonomialFactor> monomial);

}  // namespace gupho
