#include "gupho/thermal_kernel.hpp"

#include <cmath>
#include <complex>

#include "gupho/errors.hpp"
#include "gupho/hyperbolic.hpp"

namespace gupho {

namespace {

void require_beta(double beta) {
  if (!(beta > 0.0)) throw DomainError("beta must be positive");
}

}  // namespace

ThermalPoint kernel_coefficients(const GupParams& p, double beta) {
  p.validate();
  require_beta(beta);

  const double x = p.x_of_beta(beta);
  const double mw = p.mass * p.omega;
  const double mw2 = mw * mw;
  const double mw3 = mw2 * mw;

  // All sinh/cosh ratios in exp(-x) form; powers of csch underflow gracefully
  // at large x instead of the naive sinh powers overflowing.
  const double ct = hyp::coth(x);
  const double cs = hyp::csch(x);
  const double cs2 = cs * cs;
  const double cs3 = cs2 * cs;
  const double cs4 = cs2 * cs2;

  KernelCoefficients k;
  k.a1 = 0.375 * p.hbar * mw * (3.0 * x * cs2 + 5.0 * ct + 2.0 * x);
  k.a2 = 0.375 * mw2 * (6.0 * x * ct * cs2 + 10.0 * cs2 + 6.0);
  k.a3 = 0.375 * mw2 * (6.0 * x * cs3 + 4.0 * x * cs + 10.0 * ct * cs);
  k.b1 = mw3 / (32.0 * p.hbar) * (12.0 * x * cs4 + 20.0 * ct * cs2 + 8.0 * ct);
  k.b2 = -mw3 / (8.0 * p.hbar) * (12.0 * x * ct * cs3 + 20.0 * cs3 + 12.0 * cs);
  k.b3 = 3.0 * mw3 / (8.0 * p.hbar) * (6.0 * x * cs4 + 4.0 * x * cs2 + 10.0 * ct * cs2);

  const double scale = mw / (2.0 * p.hbar);
  return ThermalPoint{beta, x, scale * ct, scale * cs, k};
}

FirstOrder partition_function_parts(const GupParams& p, double beta) {
  p.validate();
  require_beta(beta);

  const double x = p.x_of_beta(beta);
  const double z0 = std::exp(-0.5 * x) / hyp::one_minus_exp(x);  // 1/(2 sinh(x/2))
  const double ch = hyp::coth_half(x);
  const double rel = 0.75 * p.alpha * p.hmw() * x * ch * ch;
  return FirstOrder{z0, -z0 * rel};
}

double partition_function(const GupParams& p, double beta) {
  return partition_function_parts(p, beta).value();
}

namespace {

// Prefactor polynomial of the first-order correction, f_E + S_{1,E}/hbar.
double correction_polynomial(const KernelCoefficients& k, double q0, double qf) {
  const double s2 = q0 * q0 + qf * qf;
  const double cr = q0 * qf;
  const double quad = k.a1 - k.a2 * s2 + 2.0 * k.a3 * cr;
  const double quart = k.b1 * (q0 * q0 * q0 * q0 + qf * qf * qf * qf) +
                       k.b2 * cr * s2 + k.b3 * cr * cr;
  return quad + quart;
}

// sqrt(m w / (2 pi hbar sinh x)) without overflow: 1/(2 sinh x) = e^{-x}/(1 - e^{-2x}).
double gaussian_prefactor(const GupParams& p, double x) {
  const double inv_two_sinh = std::exp(-x) / hyp::one_minus_exp(2.0 * x);
  return std::sqrt(p.mass * p.omega / (M_PI * p.hbar) * inv_two_sinh);
}

}  // namespace

double euclidean_propagator(const GupParams& p, double beta, double q0, double qf) {
  const ThermalPoint tp = kernel_coefficients(p, beta);
  const double poly = correction_polynomial(tp.coeffs, q0, qf);
  const double expo = -(tp.a * (q0 * q0 + qf * qf) - 2.0 * tp.b * q0 * qf);
  return gaussian_prefactor(p, tp.x) * (1.0 - p.alpha * poly) * std::exp(expo);
}

ThermalKernelValue euclidean_kernel(const GupParams& p, double beta, double q0, double qf) {
  const ThermalPoint tp = kernel_coefficients(p, beta);
  const double poly = correction_polynomial(tp.coeffs, q0, qf);
  const double expo = -(tp.a * (q0 * q0 + qf * qf) - 2.0 * tp.b * q0 * qf);
  const double z = partition_function(p, beta);
  const double amp =
      gaussian_prefactor(p, tp.x) * (1.0 - p.alpha * poly) * std::exp(expo) / z;
  return ThermalKernelValue{amp, std::abs(p.alpha * poly)};
}

PropagatorValue real_time_propagator(const GupParams& p, double q0, double qf,
                                     std::complex<double> t, double caustic_floor) {
  p.validate();
  using cplx = std::complex<double>;
  const cplx i(0.0, 1.0);

  const cplx wt = p.omega * t;
  const cplx s = std::sin(wt);
  if (std::abs(s) < caustic_floor)
    throw CausticError("caustic: |sin(omega T)| below floor");

  const cplx c = std::cos(wt);
  const cplx s2 = s * s;
  const cplx s3 = s2 * s;
  const double mw = p.mass * p.omega;
  const double sumsq = q0 * q0 + qf * qf;
  const double cr = q0 * qf;

  const cplx action0 = mw / (2.0 * s) * (sumsq * c - 2.0 * cr);

  const cplx action1 =
      -(mw * mw * mw) / (32.0 * s2 * s2) *
      ((12.0 * wt + 8.0 * std::sin(2.0 * wt) + std::sin(4.0 * wt)) *
           (q0 * q0 * q0 * q0 + qf * qf * qf * qf) -
       4.0 * (12.0 * wt * c + 11.0 * s + 3.0 * std::sin(3.0 * wt)) * cr * sumsq +
       12.0 * (4.0 * wt + 2.0 * wt * std::cos(2.0 * wt) + 5.0 * std::sin(2.0 * wt)) *
           cr * cr);

  const cplx f =
      3.0 * i * p.hbar * mw / (8.0 * s2) *
          (2.0 * wt + 5.0 * s * c + wt * std::cos(2.0 * wt)) -
      3.0 * mw * mw / (8.0 * s3) *
          (2.0 * wt * (3.0 * c * sumsq - 2.0 * (2.0 + std::cos(2.0 * wt)) * cr) +
           10.0 * s * (sumsq - 2.0 * cr * c) - 6.0 * s3 * sumsq);

  // First-order form: the alpha part of the action joins f in the linear
  // prefactor, matching the thermal branch, so the imaginary-time
  // continuation reproduces the Euclidean kernel identically.
  const cplx alpha_part = p.alpha * (f + i * action1 / p.hbar);
  const cplx prefactor = std::sqrt(mw / (2.0 * M_PI * p.hbar * i * s));
  const cplx amp = prefactor * (1.0 + alpha_part) * std::exp(i * action0 / p.hbar);
  return PropagatorValue{amp, std::abs(alpha_part)};
}

}  // namespace gupho
