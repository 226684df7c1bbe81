#include "gupho/entropy.hpp"

#include <cmath>
#include <limits>

#include "gupho/errors.hpp"
#include "gupho/hyperbolic.hpp"

namespace gupho {

namespace {

void require_beta(double beta) {
  if (!(beta > 0.0)) throw DomainError("beta must be positive");
}

}  // namespace

FirstOrder trace_rho_n_parts(const GupParams& p, double beta, int n) {
  p.validate();
  require_beta(beta);
  if (n < 1) throw DomainError("trace_rho_n: n must be >= 1");

  const double x = p.x_of_beta(beta);
  // 2^{n-1} sinh^n(x/2) / sinh(nx/2) = (1 - e^{-x})^n / (1 - e^{-nx}).
  const double base =
      std::exp(double(n) * hyp::log1mexp(x) - hyp::log1mexp(double(n) * x));
  // coth^2(x/2) - coth^2(nx/2) = 4 [w(x) - w(nx)]; at n = 1 the two weights
  // are the same expression, so the bracket cancels to zero exactly.
  const double bracket = 3.0 * p.alpha * double(n) * p.hmw() * x *
                         (hyp::bose_weight(x) - hyp::bose_weight(double(n) * x));
  return FirstOrder{base, base * bracket};
}

double trace_rho_n(const GupParams& p, double beta, int n) {
  return trace_rho_n_parts(p, beta, n).value();
}

FirstOrder purity_parts(const GupParams& p, double temperature) {
  p.validate();
  const double beta = p.beta_of_temperature(temperature);
  return trace_rho_n_parts(p, beta, 2);
}

double purity(const GupParams& p, double temperature) {
  return purity_parts(p, temperature).value();
}

double purity_high_t_limit(const GupParams& p) {
  p.validate();
  return 2.25 * p.alpha * p.hmw();
}

SpectrumSlice spectrum(const GupParams& p, double beta, int n_max) {
  p.validate();
  require_beta(beta);
  if (n_max < 0) throw DomainError("spectrum: n_max must be >= 0");

  const double x = p.x_of_beta(beta);
  const double lam_head = hyp::one_minus_exp(x);  // 1 - e^{-x}
  const double w = hyp::bose_weight(x);
  const double c = p.alpha * p.hmw() * x;

  SpectrumSlice slice;
  slice.alpha_used = p.alpha;
  slice.lambdas.reserve(n_max + 1);
  slice.h.reserve(n_max + 1);
  slice.n_valid = n_max;
  bool still_valid = true;
  for (int n = 0; n <= n_max; ++n) {
    const double hn = 3.0 * (w - 0.5 * double(n) * double(n + 1));
    const double bracket = 1.0 + c * hn;
    if (still_valid && !(bracket > 0.0)) {
      slice.n_valid = n - 1;
      still_valid = false;
    }
    slice.h.push_back(hn);
    slice.lambdas.push_back(lam_head * std::exp(-double(n) * x) * bracket);
  }
  return slice;
}

EntropyValue von_neumann(const GupParams& p, double temperature) {
  p.validate();
  const double x = p.x_of_temperature(temperature);
  const double q = std::exp(-x);
  const double om = hyp::one_minus_exp(x);
  const double base = -hyp::log1mexp(x) + x * q / om;
  const double corr =
      -3.0 * p.alpha * p.hmw() * x * x * q * (1.0 + q) / (om * om * om);
  const double ratio = base != 0.0 ? std::abs(corr) / std::abs(base) : 0.0;
  return EntropyValue{base + corr, corr, ratio};
}

EntropyValue renyi(const GupParams& p, double temperature, double gamma) {
  p.validate();
  if (std::isinf(gamma) && gamma > 0.0) return renyi_inf(p, temperature);
  if (!(gamma > 0.0)) throw DomainError("renyi: order must be positive");
  if (std::abs(gamma - 1.0) < 1e-8)
    throw OrderOneError("order-one: use von_neumann for gamma = 1");

  const double x = p.x_of_temperature(temperature);
  const double inv = 1.0 / (1.0 - gamma);
  const double base = inv * (gamma * hyp::log1mexp(x) - hyp::log1mexp(gamma * x));
  // The correction stays linear in the first-order bracket. For gamma < 1 the
  // bracket drops below zero at high temperature, so a resummed log would
  // leave the real axis there; the linear form is finite everywhere.
  const double corr = inv * 3.0 * p.alpha * gamma * p.hmw() * x *
                      (hyp::bose_weight(x) - hyp::bose_weight(gamma * x));
  const double ratio = base != 0.0 ? std::abs(corr) / std::abs(base) : 0.0;
  return EntropyValue{base + corr, corr, ratio};
}

EntropyValue renyi_inf(const GupParams& p, double temperature) {
  p.validate();
  const double x = p.x_of_temperature(temperature);
  const double base = -hyp::log1mexp(x);
  // -log of the lambda_0 bracket; the n = 0 bracket is always > 1.
  const double corr = -std::log1p(3.0 * p.alpha * p.hmw() * x * hyp::bose_weight(x));
  const double ratio = base != 0.0 ? std::abs(corr) / std::abs(base) : 0.0;
  return EntropyValue{base + corr, corr, ratio};
}

namespace {

// Stationarity condition of the von Neumann entropy in x = hbar*omega*beta:
// (1 - e^{-x})^2 - 3 alpha hbar m omega [(x-2) + 4x e^{-x} + (x+2) e^{-2x}].
// Negative just above x = 0 for alpha > 0, crossing upward at the maximum.
double stationarity(const GupParams& p, double x) {
  const double q = std::exp(-x);
  const double om = hyp::one_minus_exp(x);
  return om * om -
         3.0 * p.alpha * p.hmw() * ((x - 2.0) + 4.0 * x * q + (x + 2.0) * q * q);
}

}  // namespace

TStarResult t_star_detail(const GupParams& p) {
  p.validate();

  const double x_lo_limit = 1e-6;
  const double x_hi_limit = 1e3;
  const double growth = 1.05;

  // Geometric bracket expansion from the high-temperature end. The first
  // upward crossing is the entropy maximum; the condition has a second,
  // spurious crossing deep at low temperature (the correction term has
  // overtaken the leading one there), which this scan never reaches.
  double x_lo = x_lo_limit;
  double f_lo = stationarity(p, x_lo);
  double x_hi = x_lo;
  bool bracketed = false;
  while (x_hi < x_hi_limit) {
    x_hi = std::min(x_hi * growth, x_hi_limit);
    const double f_hi = stationarity(p, x_hi);
    if (f_lo < 0.0 && f_hi >= 0.0) {
      bracketed = true;
      break;
    }
    x_lo = x_hi;
    f_lo = f_hi;
    if (x_hi >= x_hi_limit) break;
  }
  if (!bracketed)
    throw NoMaximumError("no-maximum: entropy has no interior maximum in the bracket");

  const double x_tol = 1e-12 * p.hbar * p.omega;  // beta tolerance 1e-12
  for (int it = 0; it < 200 && (x_hi - x_lo) > x_tol; ++it) {
    const double mid = 0.5 * (x_lo + x_hi);
    if (stationarity(p, mid) < 0.0)
      x_lo = mid;
    else
      x_hi = mid;
  }

  TStarResult res;
  res.x_star = 0.5 * (x_lo + x_hi);
  res.beta_star = res.x_star / (p.hbar * p.omega);
  res.t_star = 1.0 / (p.kb * res.beta_star);
  res.residual = stationarity(p, res.x_star);
  return res;
}

double t_star(const GupParams& p) { return t_star_detail(p).t_star; }

}  // namespace gupho
