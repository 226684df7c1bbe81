#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>

#include "gupho/gaussian_moments.hpp"
#include "oracle_helpers.hpp"

using namespace gupho;

namespace {

const AbPair kAb{1.0, 0.5};

double wick_cyclic(const AbPair& ab, int n, MomentKind kind) {
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    switch (kind) {
      case MomentKind::sum_sq: {
        const std::array<MonomialFactor, 1> m{{{i, 2}}};
        sum += wick_moment(ab, n, m);
        break;
      }
      case MomentKind::cyclic_cross: {
        const std::array<MonomialFactor, 2> m{{{i, 1}, {j, 1}}};
        sum += wick_moment(ab, n, m);
        break;
      }
      case MomentKind::sum_quartic: {
        const std::array<MonomialFactor, 1> m{{{i, 4}}};
        sum += wick_moment(ab, n, m);
        break;
      }
      case MomentKind::cyclic_sq_sq: {
        const std::array<MonomialFactor, 2> m{{{i, 2}, {j, 2}}};
        sum += wick_moment(ab, n, m);
        break;
      }
      case MomentKind::cyclic_cubic_cross: {
        const std::array<MonomialFactor, 2> m1{{{i, 3}, {j, 1}}};
        const std::array<MonomialFactor, 2> m2{{{i, 1}, {j, 3}}};
        sum += wick_moment(ab, n, m1) + wick_moment(ab, n, m2);
        break;
      }
      case MomentKind::norm:
        break;
    }
  }
  return sum;
}

// 2D quadrature of poly(x1,x2) * exp(-X G_2 X^T) for the n = 2 cases.
double quad2(const AbPair& ab, const std::function<double(double, double)>& poly) {
  return oracle::trapezoid2(
      [&](double u, double v) {
        return poly(u, v) *
               std::exp(-(2.0 * ab.a * (u * u + v * v) - 4.0 * ab.b * u * v));
      },
      -8.0, 8.0, 1601);
}

}  // namespace

TEST_CASE("normalization integral") {
  CHECK(g_norm(kAb, 2) == doctest::Approx(M_PI / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(g_norm(kAb, 2) == doctest::Approx(1.8137993642342178).epsilon(1e-14));
  CHECK(g_norm(kAb, 1) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));

  CHECK(g_norm(kAb, 2) ==
        doctest::Approx(quad2(kAb, [](double, double) { return 1.0; }))
            .epsilon(1e-8));
  const double quad1 = oracle::trapezoid(
      [&](double u) { return std::exp(-(2.0 * kAb.a - 2.0 * kAb.b) * u * u); },
      -10.0, 10.0, 2001);
  CHECK(g_norm(kAb, 1) == doctest::Approx(quad1).epsilon(1e-10));

  for (int n = 1; n <= 10; ++n)
    CHECK(g_norm(kAb, n) * g_norm(kAb, n) * det_G(kAb, n) ==
          doctest::Approx(std::pow(M_PI, n)).epsilon(1e-12));
}

TEST_CASE("quadratic sum moment") {
  CHECK(moment_sum_sq(kAb, 2) == doctest::Approx(1.2091995761561452).epsilon(1e-14));
  CHECK(moment_sum_sq(kAb, 3) ==
        doctest::Approx(wick_cyclic(kAb, 3, MomentKind::sum_sq)).epsilon(1e-10));

  // Under (a, b) -> (s a, s b) the integral scales by s^{-n/2-1}.
  for (int n : {2, 4, 7}) {
    const AbPair scaled{2.0 * kAb.a, 2.0 * kAb.b};
    CHECK(moment_sum_sq(scaled, n) ==
          doctest::Approx(moment_sum_sq(kAb, n) * std::pow(2.0, -0.5 * n - 1.0))
              .epsilon(1e-12));
  }
}

TEST_CASE("cyclic cross moment") {
  // n = 2 wrap-around: the cyclic sum is 2 x1 x2.
  CHECK(moment_cyclic_cross(kAb, 2) ==
        doctest::Approx(0.60459978807807256).epsilon(1e-13));
  CHECK(moment_cyclic_cross(kAb, 2) ==
        doctest::Approx(quad2(kAb, [](double u, double v) { return 2.0 * u * v; }))
            .epsilon(1e-8));
  CHECK(moment_cyclic_cross(kAb, 4) ==
        doctest::Approx(wick_cyclic(kAb, 4, MomentKind::cyclic_cross))
            .epsilon(1e-10));

  // Decoupled sites: the cross moment dies with b.
  CHECK(std::abs(moment_cyclic_cross(AbPair{1.0, 1e-8}, 4)) < 1e-7);
}

TEST_CASE("quartic sum moment") {
  CHECK(moment_sum_quartic(kAb, 2) ==
        doctest::Approx(1.2091995761561452).epsilon(1e-13));
  CHECK(moment_sum_quartic(kAb, 5) ==
        doctest::Approx(wick_cyclic(kAb, 5, MomentKind::sum_quartic))
            .epsilon(1e-10));
}

TEST_CASE("cyclic square-square moment") {
  for (int n : {3, 6})
    CHECK(moment_cyclic_sq_sq(kAb, n) ==
          doctest::Approx(wick_cyclic(kAb, n, MomentKind::cyclic_sq_sq))
              .epsilon(1e-10));
}

TEST_CASE("cyclic cubic-cross moment") {
  for (int n : {3, 7})
    CHECK(moment_cyclic_cubic_cross(kAb, n) ==
          doctest::Approx(wick_cyclic(kAb, n, MomentKind::cyclic_cubic_cross))
              .epsilon(1e-10));
}

TEST_CASE("all closed forms vs Wick across sizes and weights") {
  const AbPair pairs[] = {{1.0, 0.5}, {1.2, 0.9}, {3.0, 0.4}};
  for (const AbPair& ab : pairs) {
    for (int n = 2; n <= 8; ++n) {
      CAPTURE(ab.a);
      CAPTURE(n);
      CHECK(moment_sum_sq(ab, n) ==
            doctest::Approx(wick_cyclic(ab, n, MomentKind::sum_sq)).epsilon(1e-10));
      CHECK(moment_cyclic_cross(ab, n) ==
            doctest::Approx(wick_cyclic(ab, n, MomentKind::cyclic_cross))
                .epsilon(1e-10));
      CHECK(moment_sum_quartic(ab, n) ==
            doctest::Approx(wick_cyclic(ab, n, MomentKind::sum_quartic))
                .epsilon(1e-10));
      if (n >= 3) {
        CHECK(moment_cyclic_sq_sq(ab, n) ==
              doctest::Approx(wick_cyclic(ab, n, MomentKind::cyclic_sq_sq))
                  .epsilon(1e-10));
        CHECK(moment_cyclic_cubic_cross(ab, n) ==
              doctest::Approx(wick_cyclic(ab, n, MomentKind::cyclic_cubic_cross))
                  .epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("moment dispatcher tags its result") {
  const MomentResult r = moment(kAb, 4, MomentKind::sum_quartic);
  CHECK(r.value == moment_sum_quartic(kAb, 4));
  CHECK(r.n == 4);
  CHECK(r.kind == MomentKind::sum_quartic);
}

TEST_CASE("even-power moments are finite and positive") {
  const MomentKind positive_kinds[] = {MomentKind::norm, MomentKind::sum_sq,
                                       MomentKind::sum_quartic,
                                       MomentKind::cyclic_sq_sq};
  const AbPair pairs[] = {{1.0, 0.5}, {2.0, 1.99}, {4.0, 0.1}};
  for (const AbPair& ab : pairs) {
    for (MomentKind kind : positive_kinds) {
      for (int n = 3; n <= 8; ++n) {
        const double v = moment(ab, n, kind).value;
        CHECK(std::isfinite(v));
        CHECK(v > 0.0);
      }
    }
  }
}

TEST_CASE("derivative identities for the quadratic moments") {
  for (int n : {2, 3, 5, 8}) {
    const double ha = 1e-5 * kAb.a;
    const double da =
        (g_norm(AbPair{kAb.a + ha, kAb.b}, n) - g_norm(AbPair{kAb.a - ha, kAb.b}, n)) /
        (2.0 * ha);
    CHECK(-0.5 * da == doctest::Approx(moment_sum_sq(kAb, n)).epsilon(1e-6));

    const double hb = 1e-5 * kAb.b;
    const double db =
        (g_norm(AbPair{kAb.a, kAb.b + hb}, n) - g_norm(AbPair{kAb.a, kAb.b - hb}, n)) /
        (2.0 * hb);
    CHECK(0.5 * db == doctest::Approx(moment_cyclic_cross(kAb, n)).epsilon(1e-6));
  }
}

TEST_CASE("perturbed-determinant derivative routes to the quartic moments") {
  for (int n : {2, 4, 6}) {
    const double h = 1e-4 * kAb.a;
    auto g_c = [&](double ap) {
      return std::pow(M_PI, 0.5 * n) / std::sqrt(det_G_perturbed_corner(kAb, n, ap));
    };
    const double dd = (g_c(kAb.a + h) - 2.0 * g_c(kAb.a) + g_c(kAb.a - h)) / (h * h);
    CHECK(0.25 * dd == doctest::Approx(moment_sum_quartic(kAb, n) / n).epsilon(1e-6));
  }
  for (int n : {3, 5, 8}) {
    const double h = 1e-4 * kAb.a;
    auto g_t = [&](double a1, double a2) {
      return std::pow(M_PI, 0.5 * n) /
             std::sqrt(det_G_perturbed_two_sites(kAb, n, a1, a2));
    };
    const double mixed = (g_t(kAb.a + h, kAb.a + h) - g_t(kAb.a + h, kAb.a - h) -
                          g_t(kAb.a - h, kAb.a + h) + g_t(kAb.a - h, kAb.a - h)) /
                         (4.0 * h * h);
    CHECK(0.25 * mixed ==
          doctest::Approx(moment_cyclic_sq_sq(kAb, n) / n).epsilon(1e-6));

    const double hb = 1e-4 * kAb.b;
    auto g_b = [&](double a1, double b1) {
      return std::pow(M_PI, 0.5 * n) / std::sqrt(det_G_perturbed_bond(kAb, n, a1, b1));
    };
    const double mixed_ab =
        (g_b(kAb.a + h, kAb.b + hb) - g_b(kAb.a + h, kAb.b - hb) -
         g_b(kAb.a - h, kAb.b + hb) + g_b(kAb.a - h, kAb.b - hb)) /
        (4.0 * h * hb);
    CHECK(-0.25 * mixed_ab ==
          doctest::Approx(moment_cyclic_cubic_cross(kAb, n) / n).epsilon(1e-6));
  }
}

TEST_CASE("Wick oracle basics") {
  const std::array<MonomialFactor, 1> cubed{{{0, 3}}};
  CHECK(wick_moment(kAb, 2, cubed) == 0.0);
  const std::array<MonomialFactor, 2> odd{{{0, 1}, {1, 2}}};
  CHECK(wick_moment(kAb, 3, odd) == 0.0);

  // x1^2 at n = 2: g * Sigma_11 with Sigma = (1/6)[[2,1],[1,2]].
  const std::array<MonomialFactor, 1> sq{{{0, 2}}};
  CHECK(wick_moment(kAb, 2, sq) ==
        doctest::Approx(g_norm(kAb, 2) / 3.0).epsilon(1e-13));
  CHECK(wick_moment(kAb, 2, sq) ==
        doctest::Approx(quad2(kAb, [](double u, double) { return u * u; }))
            .epsilon(1e-8));

  // x1^2 x2^2: g * (Sigma_11 Sigma_22 + 2 Sigma_12^2).
  const std::array<MonomialFactor, 2> sqsq{{{0, 2}, {1, 2}}};
  const double sig11 = 2.0 / 6.0, sig12 = 1.0 / 6.0;
  CHECK(wick_moment(kAb, 2, sqsq) ==
        doctest::Approx(g_norm(kAb, 2) * (sig11 * sig11 + 2.0 * sig12 * sig12))
            .epsilon(1e-13));

  const std::array<MonomialFactor, 1> six{{{0, 6}}};
  CHECK_THROWS_AS(wick_moment(kAb, 2, six), DomainError);
  const std::array<MonomialFactor, 1> oob{{{5, 2}}};
  CHECK_THROWS_AS(wick_moment(kAb, 2, oob), DomainError);
  const std::array<MonomialFactor, 0> empty{};
  CHECK(wick_moment(kAb, 2, empty) == g_norm(kAb, 2));
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(g_norm(AbPair{0.5, 0.5}, 2), DomainError);
  CHECK_THROWS_AS(moment_sum_sq(kAb, 1), DomainError);
  CHECK_THROWS_AS(moment_cyclic_sq_sq(kAb, 2), DomainError);
  CHECK_THROWS_AS(moment_cyclic_cubic_cross(kAb, 2), DomainError);
}
