#include "gupho/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <iomanip>
#include <ostream>

#include "gupho/determinants.hpp"
#include "gupho/entropy.hpp"
#include "gupho/gaussian_moments.hpp"
#include "gupho/hyperbolic.hpp"
#include "gupho/nystrom.hpp"
#include "gupho/thermal_kernel.hpp"

namespace gupho {

FirstOrder trace_rho_n_reassembled(const GupParams& p, double beta, int n) {
  if (n < 2) throw DomainError("trace_rho_n_reassembled: n must be >= 2");

  const ThermalPoint tp = kernel_coefficients(p, beta);
  const AbPair ab{tp.a, tp.b};
  const KernelCoefficients& k = tp.coeffs;

  const double g = g_norm(ab, n);
  const double i_sum_sq = moment_sum_sq(ab, n);
  const double i_cross = moment_cyclic_cross(ab, n);
  const double i_quartic = moment_sum_quartic(ab, n);

  double i_sq_sq, i_cubic_cross;
  if (n >= 3) {
    i_sq_sq = moment_cyclic_sq_sq(ab, n);
    i_cubic_cross = moment_cyclic_cubic_cross(ab, n);
  } else {
    // n = 2: the cyclic sums collapse to 2 x1^2 x2^2 and 2 x1 x2 (x1^2+x2^2).
    const std::array<MonomialFactor, 2> sq{{{0, 2}, {1, 2}}};
    const std::array<MonomialFactor, 2> cube_a{{{0, 3}, {1, 1}}};
    const std::array<MonomialFactor, 2> cube_b{{{0, 1}, {1, 3}}};
    i_sq_sq = 2.0 * wick_moment(ab, 2, sq);
    i_cubic_cross = 2.0 * (wick_moment(ab, 2, cube_a) + wick_moment(ab, 2, cube_b));
  }

  // Correction coefficient of the traced product (without the alpha factor).
  const double correction_sum = n * k.a1 * g - 2.0 * k.a2 * i_sum_sq +
                                2.0 * k.a3 * i_cross + 2.0 * k.b1 * i_quartic +
                                k.b2 * i_cubic_cross + k.b3 * i_sq_sq;

  const FirstOrder z = partition_function_parts(p, beta);
  const double zeta_alpha = -z.correction / z.base;  // n-independent Z correction
  const double prefactor = std::pow(tp.b / M_PI, 0.5 * n);  // (m w / 2 pi hbar sinh x)^{n/2}

  const double base = std::pow(z.base, -n) * prefactor * g;
  const double first_order = double(n) * zeta_alpha - p.alpha * correction_sum / g;
  return FirstOrder{base, base * first_order};
}

namespace {

struct Collector {
  std::vector<CheckResult>& checks;
  std::string suite;

  void add(const std::string& name, double max_err, double tol) {
    checks.push_back({suite, name, max_err, tol, max_err <= tol});
  }

  void add_flag(const std::string& name, bool ok) {
    checks.push_back({suite, name, ok ? 0.0 : 1.0, 0.5, ok});
  }
};

double rel_err(double got, double want) {
  const double scale = std::max(std::abs(want), 1e-300);
  return std::abs(got - want) / scale;
}

constexpr std::array<std::pair<double, double>, 5> kDetPairs{{
    {1.0, 0.5}, {1.0, 0.95}, {2.0, 0.2}, {0.7, 0.69}, {10.0, 7.5}}};

constexpr std::array<std::pair<double, double>, 3> kMomentPairs{{
    {1.0, 0.5}, {1.2, 0.9}, {3.0, 0.4}}};

void determinant_suite(Collector c, double det_h_scale) {
  double err_g = 0.0, err_h = 0.0, err_rec = 0.0, err_hg = 0.0;
  double err_corner = 0.0, err_two = 0.0, err_bond = 0.0;

  for (const auto& pair : kDetPairs) {
    const AbPair ab{pair.first, pair.second};
    for (int n = 1; n <= 12; ++n) {
      err_g = std::max(err_g, rel_err(det_G(ab, n), lu_det(build_G(ab, n))));
      err_h = std::max(err_h,
                       rel_err(det_h_scale * det_H(ab, n), lu_det(build_H(ab, n))));
      if (n >= 2) {
        Eigen::MatrixXd m = build_G(ab, n);
        m(0, 0) = 2.0 * 1.3 * ab.a;
        err_corner = std::max(
            err_corner,
            rel_err(det_G_perturbed_corner(ab, n, 1.3 * ab.a), lu_det(m)));
      }
      if (n >= 3) {
        Eigen::MatrixXd m = build_G(ab, n);
        m(0, 0) = 2.0 * 1.2 * ab.a;
        m(1, 1) = 2.0 * 0.9 * ab.a;
        err_two = std::max(
            err_two, rel_err(det_G_perturbed_two_sites(ab, n, 1.2 * ab.a, 0.9 * ab.a),
                             lu_det(m)));
        const double b1 = 0.5 * (ab.a + ab.b);  // keeps the perturbed bond generic
        Eigen::MatrixXd mb = build_G(ab, n);
        mb(0, 0) = mb(1, 1) = 2.0 * 1.1 * ab.a;
        mb(0, 1) = mb(1, 0) = -b1;
        err_bond = std::max(
            err_bond, rel_err(det_G_perturbed_bond(ab, n, 1.1 * ab.a, b1), lu_det(mb)));
      }
    }
    for (int n = 2; n <= 20; ++n) {
      const double rec = 2.0 * ab.a * det_h_scale * det_H(ab, n - 1) -
                         ab.b * ab.b * det_h_scale * det_H(ab, n - 2);
      err_rec = std::max(err_rec, rel_err(det_h_scale * det_H(ab, n), rec));
    }
    // det H_n sqrt(a^2-b^2) = a sqrt(det G_{2n}) - (b^2/2) sqrt(det G_{2n-2})
    const double root = std::sqrt((ab.a - ab.b) * (ab.a + ab.b));
    for (int n = 1; n <= 10; ++n) {
      const double lhs = det_h_scale * det_H(ab, n) * root;
      const double g2n = std::sqrt(det_G(ab, 2 * n));
      const double g2n2 = n >= 2 ? std::sqrt(det_G(ab, 2 * n - 2)) : 0.0;
      err_hg = std::max(err_hg, rel_err(lhs, ab.a * g2n - 0.5 * ab.b * ab.b * g2n2));
    }
  }

  c.add("cyclic determinant closed form vs dense LU (n<=12)", err_g, 1e-10);
  c.add("open tridiagonal determinant closed form vs dense LU (n<=12)", err_h, 1e-10);
  c.add("open determinant three-term recursion (n<=20)", err_rec, 1e-10);
  c.add("open/cyclic determinant bridge identity (n<=10)", err_hg, 1e-10);
  c.add("perturbed-corner determinant vs dense LU", err_corner, 1e-10);
  c.add("perturbed-two-site determinant vs dense LU", err_two, 1e-10);
  c.add("perturbed-bond determinant vs dense LU", err_bond, 1e-10);
}

void moment_suite(Collector c) {
  double err_norm = 0.0, err_sq = 0.0, err_cross = 0.0;
  double err_quart = 0.0, err_sqsq = 0.0, err_cubic = 0.0;

  for (const auto& [a, b] : kMomentPairs) {
    const AbPair ab{a, b};
    for (int n = 2; n <= 8; ++n) {
      err_norm = std::max(
          err_norm, rel_err(g_norm(ab, n) * g_norm(ab, n) * det_G(ab, n),
                            std::pow(M_PI, n)));
      double wick = 0.0;
      for (int i = 0; i < n; ++i) {
        const std::array<MonomialFactor, 1> mono{{{i, 2}}};
        wick += wick_moment(ab, n, mono);
      }
      err_sq = std::max(err_sq, rel_err(moment_sum_sq(ab, n), wick));

      wick = 0.0;
      for (int i = 0; i < n; ++i) {
        const std::array<MonomialFactor, 2> mono{{{i, 1}, {(i + 1) % n, 1}}};
        wick += wick_moment(ab, n, mono);
      }
      err_cross = std::max(err_cross, rel_err(moment_cyclic_cross(ab, n), wick));

      wick = 0.0;
      for (int i = 0; i < n; ++i) {
        const std::array<MonomialFactor, 1> mono{{{i, 4}}};
        wick += wick_moment(ab, n, mono);
      }
      err_quart = std::max(err_quart, rel_err(moment_sum_quartic(ab, n), wick));

      if (n >= 3) {
        wick = 0.0;
        for (int i = 0; i < n; ++i) {
          const std::array<MonomialFactor, 2> mono{{{i, 2}, {(i + 1) % n, 2}}};
          wick += wick_moment(ab, n, mono);
        }
        err_sqsq = std::max(err_sqsq, rel_err(moment_cyclic_sq_sq(ab, n), wick));

        wick = 0.0;
        for (int i = 0; i < n; ++i) {
          const int j = (i + 1) % n;
          const std::array<MonomialFactor, 2> m1{{{i, 3}, {j, 1}}};
          const std::array<MonomialFactor, 2> m2{{{i, 1}, {j, 3}}};
          wick += wick_moment(ab, n, m1) + wick_moment(ab, n, m2);
        }
        err_cubic =
            std::max(err_cubic, rel_err(moment_cyclic_cubic_cross(ab, n), wick));
      }
    }
  }
  c.add("normalization identity g_n^2 det G_n = pi^n", err_norm, 1e-12);
  c.add("quadratic sum moment vs Wick (n<=8)", err_sq, 1e-10);
  c.add("cyclic cross moment vs Wick (n<=8)", err_cross, 1e-10);
  c.add("quartic sum moment vs Wick (n<=8)", err_quart, 1e-10);
  c.add("cyclic square-square moment vs Wick (n<=8)", err_sqsq, 1e-10);
  c.add("cyclic cubic-cross moment vs Wick (n<=8)", err_cubic, 1e-10);

  // Derivative routes. First derivatives of g_n in a and b reproduce the
  // quadratic moments; second derivatives of the perturbed determinants
  // reproduce the quartic ones. Central differences; the second-derivative
  // step is larger because the difference magnitude h^2 f'' must stay well
  // above the roundoff floor eps*|f|.
  double err_da = 0.0, err_db = 0.0;
  double err_route_a = 0.0, err_route_b = 0.0, err_route_c = 0.0;
  for (const auto& [a, b] : kMomentPairs) {
    const AbPair ab{a, b};
    for (int n : {2, 3, 5, 8}) {
      const double ha = 1e-5 * a;
      const double da = (g_norm(AbPair{a + ha, b}, n) - g_norm(AbPair{a - ha, b}, n)) /
                        (2.0 * ha);
      err_da = std::max(err_da, rel_err(-0.5 * da, moment_sum_sq(ab, n)));
      const double hb = 1e-5 * b;
      const double db = (g_norm(AbPair{a, b + hb}, n) - g_norm(AbPair{a, b - hb}, n)) /
                        (2.0 * hb);
      err_db = std::max(err_db, rel_err(0.5 * db, moment_cyclic_cross(ab, n)));

      const double h2 = 1e-4 * a;
      const double pre = std::pow(M_PI, 0.5 * n);
      auto g_corner = [&](double ap) {
        return pre / std::sqrt(det_G_perturbed_corner(ab, n, ap));
      };
      const double dd2 =
          (g_corner(a + h2) - 2.0 * g_corner(a) + g_corner(a - h2)) / (h2 * h2);
      err_route_a =
          std::max(err_route_a, rel_err(0.25 * dd2, moment_sum_quartic(ab, n) / n));

      if (n >= 3) {
        auto g_two = [&](double a1, double a2) {
          return pre / std::sqrt(det_G_perturbed_two_sites(ab, n, a1, a2));
        };
        const double mixed = (g_two(a + h2, a + h2) - g_two(a + h2, a - h2) -
                              g_two(a - h2, a + h2) + g_two(a - h2, a - h2)) /
                             (4.0 * h2 * h2);
        err_route_b = std::max(
            err_route_b, rel_err(0.25 * mixed, moment_cyclic_sq_sq(ab, n) / n));

        auto g_bond = [&](double a1, double b1) {
          return pre / std::sqrt(det_G_perturbed_bond(ab, n, a1, b1));
        };
        const double hb2 = 1e-4 * b;
        const double mixed_ab =
            (g_bond(a + h2, b + hb2) - g_bond(a + h2, b - hb2) -
             g_bond(a - h2, b + hb2) + g_bond(a - h2, b - hb2)) /
            (4.0 * h2 * hb2);
        err_route_c =
            std::max(err_route_c,
                     rel_err(-0.25 * mixed_ab, moment_cyclic_cubic_cross(ab, n) / n));
      }
    }
  }
  c.add("quadratic moments from d(g_n)/da, d(g_n)/db", std::max(err_da, err_db), 1e-6);
  c.add("quartic sum moment from corner-perturbation derivative", err_route_a, 1e-6);
  c.add("square-square moment from two-site-perturbation derivative", err_route_b, 1e-6);
  c.add("cubic-cross moment from bond-perturbation derivative", err_route_c, 1e-6);
}

void identity_suite(Collector c) {
  // Tr rho = 1 exactly, any alpha and x.
  double err_norm = 0.0;
  for (int i = 0; i < 20; ++i) {
    for (int j = 0; j < 20; ++j) {
      const GupParams p{1.0, 1.0, 1.0, 1.0, 0.05 * i / 19.0};
      const double x = 0.1 + (20.0 - 0.1) * j / 19.0;
      err_norm = std::max(err_norm, std::abs(trace_rho_n(p, x, 1) - 1.0));
    }
  }
  c.add("unit trace of the thermal state (20x20 grid)", err_norm, 0.0);

  // Closed-form trace vs the end-to-end reassembly.
  double err_chain = 0.0;
  for (double alpha : {0.0, 0.01}) {
    const GupParams p{1.0, 1.0, 1.0, 1.0, alpha};
    for (int n : {2, 3, 4})
      for (double x : {0.5, 1.0, 2.0})
        err_chain = std::max(
            err_chain,
            rel_err(trace_rho_n_reassembled(p, x, n).value(), trace_rho_n(p, x, n)));
  }
  c.add("closed-form trace vs module reassembly", err_chain, 1e-9);

  // Integer-order Renyi from the trace. Exact at alpha = 0; at alpha > 0 the
  // two routes differ by the log expansion of the first-order bracket, so the
  // budget there is eps^2/2 / (n-1).
  double err_renyi0 = 0.0, err_renyi1 = 0.0;
  for (double alpha : {0.0, 0.01}) {
    const GupParams p{1.0, 1.0, 1.0, 1.0, alpha};
    for (int n : {2, 3, 4})
      for (double x : {0.5, 1.0, 2.0}) {
        const double from_trace = std::log(trace_rho_n(p, x, n)) / (1.0 - n);
        const double diff =
            std::abs(from_trace - renyi(p, 1.0 / x, double(n)).value);
        if (alpha == 0.0) {
          err_renyi0 = std::max(err_renyi0, diff);
        } else {
          const FirstOrder tr = trace_rho_n_parts(p, x, n);
          const double eps = tr.correction / tr.base;
          err_renyi1 =
              std::max(err_renyi1, diff / (0.5 * eps * eps / (n - 1) + 1e-12));
        }
      }
  }
  c.add("integer-order Renyi vs log-trace (alpha=0)", err_renyi0, 1e-12);
  c.add("integer-order Renyi vs log-trace (alpha=0.01, budget units)",
        err_renyi1, 1.0);

  // Power sums of the spectrum against the closed-form traces, first order.
  double err_dual = 0.0;
  for (double alpha : {0.0, 0.01}) {
    const GupParams p{1.0, 1.0, 1.0, 1.0, alpha};
    for (double x : {0.5, 1.0, 2.0}) {
      const int n_max = std::max(200, int(60.0 / x));
      const SpectrumSlice s = spectrum(p, x, n_max);
      const double head = hyp::one_minus_exp(x);
      const double cx = p.alpha * p.hmw() * x;
      for (int k : {2, 3}) {
        double sum = 0.0;
        for (int n = 0; n <= s.n_valid; ++n) {
          const double base = std::exp(k * (std::log(head) - n * x));
          sum += base * (1.0 + k * cx * s.h[n]);
        }
        const double budget = alpha == 0.0 ? 1e-10 : 3.0 * x * alpha * alpha + 1e-8;
        err_dual = std::max(err_dual,
                            std::abs(sum - trace_rho_n(p, x, k)) / budget);
      }
    }
  }
  c.add("spectrum power sums vs closed-form traces (budget units)", err_dual, 1.0);

  // Series condition on the spectrum correction h_n.
  double err_series = 0.0;
  {
    const GupParams p{};
    for (double x : {0.5, 1.0, 2.0}) {
      const SpectrumSlice s = spectrum(p, x, 400);
      for (int k = 1; k <= 5; ++k) {
        double lhs = 0.0;
        for (int n = int(s.h.size()) - 1; n >= 0; --n)
          lhs += std::exp(-double(n) * k * x) * s.h[n];
        const double pk = hyp::one_minus_exp(k * x);
        const double rhs = 3.0 * hyp::bose_weight(x) / pk + 3.0 / (pk * pk) -
                           3.0 / (pk * pk * pk);
        // At k = 1 both sides cancel to zero, so scale by the largest
        // constituent term instead of the (vanishing) value.
        const double scale = std::max(std::abs(rhs), 3.0 / (pk * pk * pk));
        err_series = std::max(err_series, std::abs(lhs - rhs) / scale);
      }
    }
  }
  c.add("spectrum correction series condition (k<=5)", err_series, 1e-10);

  // High-temperature purity limit.
  double err_plim = 0.0;
  for (double alpha : {0.04, 0.08}) {
    const GupParams p{1.0, 1.0, 1.0, 1.0, alpha};
    err_plim = std::max(err_plim,
                        std::abs(purity(p, 1e4) - purity_high_t_limit(p)));
  }
  c.add("high-temperature purity limit", err_plim, 1e-3);

  // Renyi order -> 1 recovers the von Neumann entropy.
  double err_limit = 0.0;
  for (double alpha : {0.0, 0.01}) {
    const GupParams p{1.0, 1.0, 1.0, 1.0, alpha};
    for (double x : {0.5, 1.0, 2.0}) {
      const double t = 1.0 / x;
      const double sv = von_neumann(p, t).value;
      err_limit = std::max(err_limit, std::abs(renyi(p, t, 1.0 + 1e-4).value - sv));
      err_limit = std::max(err_limit, std::abs(renyi(p, t, 1.0 - 1e-4).value - sv));
    }
  }
  c.add("Renyi order->1 limit vs von Neumann", err_limit, 1e-3);

  // Temperature shape: monotone at alpha = 0, interior maximum at alpha > 0
  // located by the stationarity root.
  {
    const GupParams p0{};
    const GupParams p1{1.0, 1.0, 1.0, 1.0, 0.01};
    const int npts = 500;
    std::vector<double> ts(npts);
    for (int i = 0; i < npts; ++i)
      ts[i] = 0.05 * std::pow(100.0 / 0.05, double(i) / (npts - 1));

    bool monotone = true;
    double prev = von_neumann(p0, ts[0]).value;
    for (int i = 1; i < npts; ++i) {
      const double cur = von_neumann(p0, ts[i]).value;
      if (cur < prev) monotone = false;
      prev = cur;
    }
    c.add_flag("von Neumann entropy monotone in T at alpha=0", monotone);

    int arg = 0;
    for (int i = 1; i < npts; ++i)
      if (von_neumann(p1, ts[i]).value > von_neumann(p1, ts[arg]).value) arg = i;
    const bool interior = arg > 0 && arg + 1 < npts;
    const TStarResult root = t_star_detail(p1);
    const bool bracket = interior && root.t_star >= ts[arg - 1] &&
                         root.t_star <= ts[arg + 1];
    c.add_flag("entropy maximum at alpha=0.01 matches stationarity root", bracket);
    c.add("stationarity residual at the entropy maximum",
          std::abs(root.residual), 1e-10);
  }

  // Renyi order dependence: ordered at alpha = 0, reversed at high T for
  // alpha > 0.
  {
    const GupParams p0{};
    const GupParams p1{1.0, 1.0, 1.0, 1.0, 0.01};
    bool ordered = true;
    for (int i = 0; i < 200; ++i) {
      const double t = 0.1 * std::pow(1e3, double(i) / 199.0);
      const double s08 = renyi(p0, t, 0.8).value;
      const double s18 = renyi(p0, t, 1.8).value;
      const double sinf = renyi_inf(p0, t).value;
      if (!(s08 >= s18 && s18 >= sinf)) ordered = false;
    }
    c.add_flag("Renyi entropy non-increasing in the order at alpha=0", ordered);

    bool reversed = false;
    for (int i = 0; i < 200; ++i) {
      const double t = 10.0 * std::pow(100.0, double(i) / 199.0);
      const double s08 = renyi(p1, t, 0.8).value;
      const double s18 = renyi(p1, t, 1.8).value;
      const double sinf = renyi_inf(p1, t).value;
      if (s08 < s18 && s18 < sinf) reversed = true;
    }
    c.add_flag("Renyi order dependence reverses at high T for alpha=0.01", reversed);
  }
}

void nystrom_suite(Collector c) {
  const GridSpec grid{10.0, 400, QuadScheme::trapezoid};

  {
    const GupParams p{};
    const auto ev = eigenvalues(discretize(p, 1.0, grid));
    const double head = hyp::one_minus_exp(1.0);
    double err = 0.0;
    for (int n = 0; n < 6; ++n)
      err = std::max(err, std::abs(ev[n] - head * std::exp(-double(n))));
    c.add("Nystrom eigenvalues vs geometric spectrum (alpha=0, top 6)", err, 1e-6);
  }
  {
    const GupParams p{1.0, 1.0, 1.0, 1.0, 0.005};
    const SpectrumComparison cmp = compare_spectrum(p, 1.0, grid, 5);
    c.add("Nystrom eigenvalues vs first-order spectrum (alpha=0.005, top 5)",
          cmp.max_abs_diff, 5e-4);
  }
}

}  // namespace

VerifyReport run_verification(const VerifyOptions& opts) {
  VerifyReport report;
  determinant_suite(Collector{report.checks, "determinants"}, opts.det_h_scale);
  moment_suite(Collector{report.checks, "moments"});
  identity_suite(Collector{report.checks, "identities"});
  if (opts.full) nystrom_suite(Collector{report.checks, "spectrum"});
  return report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
  std::string suite;
  for (const auto& chk : report.checks) {
    if (chk.suite != suite) {
      suite = chk.suite;
      out << "== " << suite << " ==\n";
    }
    out << (chk.pass ? "  PASS  " : "  FAIL  ") << std::left << std::setw(62)
        << chk.name << " max err " << std::scientific << std::setprecision(2)
        << chk.max_err << " (tol " << chk.tolerance << ")\n"
        << std::defaultfloat;
  }
  int passed = 0;
  for (const auto& chk : report.checks) passed += chk.pass ? 1 : 0;
  out << (report.all_pass() ? "OK" : "FAILED") << ": " << passed << "/"
      << report.checks.size() << " checks passed\n";
}

}  // namespace gupho
