#pragma once

#include <complex>

#include "gupho/params.hpp"

namespace gupho {

/// Polynomial coefficients of the first-order prefactor of the thermal kernel:
/// the quadratic part A1 - A2 (q0^2 + qf^2) + 2 A3 q0 qf and the quartic part
/// B1 (q0^4 + qf^4) + B2 (q0^3 qf + q0 qf^3) + B3 q0^2 qf^2.
struct KernelCoefficients {
  double a1, a2, a3;
  double b1, b2, b3;
};

/**
 * Everything the thermal branch needs at one inverse temperature: the
 * dimensionless x = hbar*omega*beta, the Gaussian exponent weights a and b
 * (a/b = cosh x, a > b > 0), and the prefactor coefficients.
 */
struct ThermalPoint {
  double beta;
  double x;
  double a;
  double b;
  KernelCoefficients coeffs;
};

/// Exponent weights and prefactor coefficients at inverse temperature beta.
/// All ratios are evaluated in exp(-x) form, so large x does not overflow.
ThermalPoint kernel_coefficients(const GupParams& p, double beta);

/// Partition function split into its alpha = 0 part 1/(2 sinh(x/2)) and the
/// first-order correction.
FirstOrder partition_function_parts(const GupParams& p, double beta);

/// Z(beta) to first order in alpha.
double partition_function(const GupParams& p, double beta);

/// Diagonal-real thermal kernel value. validity_ratio is the magnitude of the
/// alpha part of the prefactor, |alpha * (quadratic + quartic polynomial)|.
struct ThermalKernelValue {
  double amplitude;
  double validity_ratio;
};

/// Normalized thermal state rho_T[qf, q0; beta] = G[qf, q0; hbar*beta] / Z.
ThermalKernelValue euclidean_kernel(const GupParams& p, double beta, double q0, double qf);

/// Un-normalized Euclidean propagator G[qf, q0; tau] at tau = hbar*beta
/// (euclidean_kernel times Z). Kept separate so oracle code can check the
/// imaginary-time continuation without dividing and re-multiplying by Z.
double euclidean_propagator(const GupParams& p, double beta, double q0, double qf);

struct PropagatorValue {
  std::complex<double> amplitude;
  double validity_ratio;
};

/**
 * Real-time oscillator propagator K[qf, q0; T] to first order in alpha.
 *
 * The time argument is complex so the imaginary-time continuation
 * T = -i tau can be evaluated directly; for real T this is the ordinary
 * propagator. The first-order action term is kept in the linear prefactor,
 * 1 + alpha*(f + i S1/hbar), consistent with the thermal branch.
 *
 * Throws CausticError when |sin(omega T)| < caustic_floor.
 */
PropagatorValue real_time_propagator(const GupParams& p, double q0, double qf,
                                     std::complex<double> t,
                                     double caustic_floor = 1e-12);

}  // namespace gupho
