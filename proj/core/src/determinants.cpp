#include "gupho/determinants.hpp"

#include <cmath>

#include <Eigen/LU>

#include "tridiag_roots.hpp"

namespace gupho {

using detail::power_diff;
using detail::Roots;
using detail::split_roots;

namespace {

void require_n(int n, int n_min, const char* what) {
  if (n < n_min) throw DomainError(std::string(what) + ": n out of range");
}

}  // namespace

Eigen::MatrixXd build_G(const AbPair& ab, int n) {
  ab.validate();
  require_n(n, 1, "build_G");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  if (n == 1) {
    m(0, 0) = 2.0 * ab.a - 2.0 * ab.b;
    return m;
  }
  for (int i = 0; i < n; ++i) m(i, i) = 2.0 * ab.a;
  if (n == 2) {
    m(0, 1) = m(1, 0) = -2.0 * ab.b;
    return m;
  }
  for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = -ab.b;
  m(0, n - 1) = m(n - 1, 0) = -ab.b;
  return m;
}

Eigen::MatrixXd build_H(const AbPair& ab, int n) {
  ab.validate();
  require_n(n, 0, "build_H");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 2.0 * ab.a;
  for (int i = 0; i + 1 < n; ++i) m(i, i + 1) = m(i + 1, i) = -ab.b;
  return m;
}

double lu_det(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw DomainError("lu_det: matrix must be square");
  if (m.rows() == 0) return 1.0;
  return Eigen::PartialPivLU<Eigen::MatrixXd>(m).determinant();
}

double det_G(const AbPair& ab, int n) {
  ab.validate();
  require_n(n, 1, "det_G");
  const Roots r = split_roots(ab);
  const double diff = power_diff(r, n);
  return std::ldexp(diff * diff, -n);
}

double det_H(const AbPair& ab, int n) {
  ab.validate();
  require_n(n, 0, "det_H");
  // (s^{2n+2} - d^{2n+2}) / (2^{n+2} sqrt(a^2-b^2)); the closed form with
  // det H_0 = 1, det H_1 = 2a that solves the three-term recursion.
  const Roots r = split_roots(ab);
  return std::ldexp(power_diff(r, 2 * n + 2) / r.root, -(n + 2));
}

DetPair det_pair(const AbPair& ab, int n) {
  ab.validate();
  require_n(n, 1, "det_pair");
  DetPair out;
  out.det_g = det_G(ab, n);
  out.det_h_list.reserve(n);
  for (int k = 0; k < n; ++k) out.det_h_list.push_back(det_H(ab, k));
  return out;
}

double det_G_perturbed_corner(const AbPair& ab, int n, double a_prime) {
  ab.validate();
  require_n(n, 2, "det_G_perturbed_corner");
  return det_G(ab, n) + 2.0 * (a_prime - ab.a) * det_H(ab, n - 1);
}

double det_G_perturbed_two_sites(const AbPair& ab, int n, double a1, double a2) {
  ab.validate();
  require_n(n, 3, "det_G_perturbed_two_sites");
  const double h2 = det_H(ab, n - 2);
  const double h3 = det_H(ab, n - 3);
  const double d1 = a1 - ab.a;
  const double d2 = a2 - ab.a;
  return 4.0 * d1 * d2 * h2 + 4.0 * ab.a * (d1 + d2) * h2 -
         2.0 * ab.b * ab.b * (d1 + d2) * h3 + det_G(ab, n);
}

double det_G_perturbed_bond(const AbPair& ab, int n, double a1, double b1) {
  ab.validate();
  require_n(n, 3, "det_G_perturbed_bond");
  const double h2 = det_H(ab, n - 2);
  const double h3 = det_H(ab, n - 3);
  const double da = a1 - ab.a;
  const double db = b1 - ab.b;
  return (4.0 * da * (a1 + ab.a) - db * (b1 + ab.b)) * h2 -
         4.0 * ab.b * ab.b * da * h3 - 2.0 * db * std::pow(ab.b, n - 1) +
         det_G(ab, n);
}

}  // namespace gupho
