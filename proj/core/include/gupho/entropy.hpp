#pragma once

#include <vector>

#include "gupho/params.hpp"

namespace gupho {

/// Entropy in nats, split into the alpha = 0 value and the first-order
/// correction. validity_ratio = |alpha_correction| / |alpha = 0 part|.
struct EntropyValue {
  double value;
  double alpha_correction;
  double validity_ratio;
};

/**
 * Truncated eigenvalue spectrum of the thermal state,
 *   lambda_n = (1 - e^{-x}) e^{-n x} [1 + alpha (hbar m omega x) h_n],
 *   h_n = 3 [ e^{-x}/(1 - e^{-x})^2 - n(n+1)/2 ].
 *
 * The first-order bracket turns negative at large n; n_valid is the largest
 * index with a positive bracket. Entries beyond it are still returned (the
 * full sum is what telescopes to 1) but are outside the expansion's own
 * validity, so spectrum-derived quantities should sum only up to n_valid.
 */
struct SpectrumSlice {
  std::vector<double> lambdas;  // indices 0..n_max
  std::vector<double> h;        // h_n, independent of alpha
  int n_valid;                  // largest n with positive bracket (or n_max)
  double alpha_used;

  bool is_valid(int n) const { return n <= n_valid; }
};

/// Tr rho_T^n to first order in alpha; exactly 1 at n = 1 for any alpha.
double trace_rho_n(const GupParams& p, double beta, int n);

/// Same, split into alpha = 0 part and correction.
FirstOrder trace_rho_n_parts(const GupParams& p, double beta, int n);

/// Purity Tr rho_T^2 as a function of temperature.
double purity(const GupParams& p, double temperature);
FirstOrder purity_parts(const GupParams& p, double temperature);

/// High-temperature limit of the purity, (9/4) alpha hbar m omega.
double purity_high_t_limit(const GupParams& p);

/// Eigenvalues lambda_0..lambda_n_max of the thermal state.
SpectrumSlice spectrum(const GupParams& p, double beta, int n_max);

/// von Neumann entropy S(T) to first order in alpha.
EntropyValue von_neumann(const GupParams& p, double temperature);

/**
 * Renyi entropy of real order gamma > 0, gamma != 1, in a cancellation-safe
 * form near gamma = 1 and strictly linear in the first-order correction, so
 * it is finite for every temperature (for gamma < 1 the first-order bracket
 * itself turns negative at high T). Agrees with the log-trace route
 * (1/(1-n)) log(trace_rho_n(n)) exactly at alpha = 0 and to O(alpha^2)
 * otherwise. Throws OrderOneError when |gamma - 1| < 1e-8 (use von_neumann);
 * gamma = +infinity forwards to renyi_inf.
 */
EntropyValue renyi(const GupParams& p, double temperature, double gamma);

/// gamma -> infinity limit, -log(lambda_0). Separate code path: the finite
/// order formula overflows for large gamma*x.
EntropyValue renyi_inf(const GupParams& p, double temperature);

struct TStarResult {
  double t_star;     // temperature of the entropy maximum
  double beta_star;  // 1 / (kb * t_star)
  double x_star;     // hbar * omega * beta_star
  double residual;   // stationarity condition evaluated at the root
};

/**
 * Temperature at which the von Neumann entropy is maximal (alpha > 0 only).
 * Solves the stationarity condition
 *   (1 - e^{-x})^2 - 3 alpha hbar m omega [ (x-2) + 4x e^{-x} + (x+2) e^{-2x} ] = 0
 * by geometric bracket expansion plus bisection over x in [1e-6, 1e3],
 * taking the smallest root (the maximum; the condition has a second,
 * spurious root deep in the low-temperature regime where the correction
 * term has already overtaken the leading one).
 * Throws NoMaximumError when no sign change exists (e.g. alpha = 0).
 */
TStarResult t_star_detail(const GupParams& p);

/// Convenience wrapper returning just the temperature.
double t_star(const GupParams& p);

}  // namespace gupho
