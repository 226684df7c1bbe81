#include "gupho/gaussian_moments.hpp"

#include <cmath>
#include <vector>

#include <Eigen/LU>

#include "tridiag_roots.hpp"

namespace gupho {

using detail::power_diff;
using detail::power_sum;
using detail::Roots;
using detail::split_roots;

namespace {

void require_n(int n, int n_min, const char* what) {
  if (n < n_min) throw DomainError(std::string(what) + ": n out of range");
}

}  // namespace

double g_norm(const AbPair& ab, int n) {
  ab.validate();
  require_n(n, 1, "g_norm");
  return std::pow(M_PI, 0.5 * n) / std::sqrt(det_G(ab, n));
}

double moment_sum_sq(const AbPair& ab, int n) {
  ab.validate();
  require_n(n, 2, "moment_sum_sq");
  const Roots r = split_roots(ab);
  return g_norm(ab, n) * n / (4.0 * r.root) * power_sum(r, n) / power_diff(r, n);
}

double moment_cyclic_cross(const AbPair& ab, int n) {
  ab.validate();
  require_n(n, 2, "moment_cyclic_cross");
  const Roots r = split_roots(ab);
  return g_norm(ab, n) * n * ab.b / (2.0 * r.root) * power_sum(r, n - 2) /
         power_diff(r, n);
}

double moment_sum_quartic(const AbPair& ab, int n) {
  ab.validate();
  require_n(n, 2, "moment_sum_quartic");
  const double h1 = det_H(ab, n - 1);
  const double dg = det_G(ab, n);
  return g_norm(ab, n) * 0.75 * n * (h1 * h1) / (dg * dg);
}

double moment_cyclic_sq_sq(const AbPair& ab, int n) {
  ab.validate();
  require_n(n, 3, "moment_cyclic_sq_sq");
  const double h2 = det_H(ab, n - 2);
  const double h3 = det_H(ab, n - 3);
  const double dg = det_G(ab, n);
  const double b2 = ab.b * ab.b;
  const double bracket = 12.0 * ab.a * ab.a * h2 * h2 -
                         12.0 * ab.a * b2 * h2 * h3 + 3.0 * b2 * b2 * h3 * h3 -
                         2.0 * h2 * dg;
  return g_norm(ab, n) * n / (4.0 * dg * dg) * bracket;
}

double moment_cyclic_cubic_cross(const AbPair& ab, int n) {
  ab.validate();
  require_n(n, 3, "moment_cyclic_cubic_cross");
  const double h2 = det_H(ab, n - 2);
  const double h3 = det_H(ab, n - 3);
  const double dg = det_G(ab, n);
  return g_norm(ab, n) * 1.5 * n *
         (std::pow(ab.b, n - 1) + ab.b * h2) *
         (2.0 * ab.a * h2 - ab.b * ab.b * h3) / (dg * dg);
}

MomentResult moment(const AbPair& ab, int n, MomentKind kind) {
  switch (kind) {
    case MomentKind::norm:
      return {g_norm(ab, n), n, kind};
    case MomentKind::sum_sq:
      return {moment_sum_sq(ab, n), n, kind};
    case MomentKind::cyclic_cross:
      return {moment_cyclic_cross(ab, n), n, kind};
    case MomentKind::sum_quartic:
      return {moment_sum_quartic(ab, n), n, kind};
    case MomentKind::cyclic_sq_sq:
      return {moment_cyclic_sq_sq(ab, n), n, kind};
    case MomentKind::cyclic_cubic_cross:
      return {moment_cyclic_cubic_cross(ab, n), n, kind};
  }
  throw DomainError("moment: unknown kind");
}

double wick_moment(const AbPair& ab, int n, std::span<const MonomialFactor> monomial) {
  ab.validate();
  require_n(n, 1, "wick_moment");

  std::vector<int> idx;
  for (const auto& [i, power] : monomial) {
    if (i < 0 || i >= n) throw DomainError("wick_moment: index out of range");
    if (power < 0) throw DomainError("wick_moment: negative power");
    for (int k = 0; k < power; ++k) idx.push_back(i);
  }
  if (idx.size() % 2 != 0) return 0.0;  // odd moments vanish by parity
  if (idx.size() > 4) throw DomainError("wick_moment: total power > 4 unsupported");

  const double g = g_norm(ab, n);
  if (idx.empty()) return g;

  // Covariance of exp(-X G X^T) is (1/2) G^{-1}; inverse via the dense LU.
  const Eigen::MatrixXd cov =
      0.5 * Eigen::PartialPivLU<Eigen::MatrixXd>(build_G(ab, n)).inverse();

  if (idx.size() == 2) return g * cov(idx[0], idx[1]);
  return g * (cov(idx[0], idx[1]) * cov(idx[2], idx[3]) +
              cov(idx[0], idx[2]) * cov(idx[1], idx[3]) +
              cov(idx[0], idx[3]) * cov(idx[1], idx[2]));
}

}  // namespace gupho
