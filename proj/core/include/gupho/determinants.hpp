#pragma once

#include <vector>

#include <Eigen/Core>

#include "gupho/errors.hpp"

namespace gupho {

/// Gaussian exponent weights with the positive-definiteness requirement
/// a > b > 0 baked in. Thermal points always satisfy it (a/b = cosh x > 1).
struct AbPair {
  double a;
  double b;

  void validate() const {
    if (!(b > 0.0) || !(a > b))
      throw DomainError("AbPair: need a > b > 0 for a positive definite form");
  }
};

/**
 * Cyclic tridiagonal matrix with 2a on the diagonal and -b on the sub/super
 * diagonals and corners. Small sizes coalesce: at n = 2 corner and
 * subdiagonal add to -2b, at n = 1 the wrap-around lands on the diagonal
 * giving [2a - 2b]. That is what chaining n kernel factors under a trace
 * produces, and it keeps det G_2 = 4(a^2 - b^2) and Tr rho_T = 1 consistent.
 */
Eigen::MatrixXd build_G(const AbPair& ab, int n);

/// Open tridiagonal companion matrix (no corner entries), n >= 0.
Eigen::MatrixXd build_H(const AbPair& ab, int n);

/// Determinant via dense LU with partial pivoting; the brute-force oracle
/// for every closed form in this header.
double lu_det(const Eigen::MatrixXd& m);

/// det G_n = (1/2^n) [ (sqrt(a+b)+sqrt(a-b))^n - (sqrt(a+b)-sqrt(a-b))^n ]^2, n >= 1.
double det_G(const AbPair& ab, int n);

/// det G_n bundled with the open-determinant prefix det H_0..det H_{n-1};
/// every entry is positive when a > b > 0, with det H_0 = 1, det H_1 = 2a.
struct DetPair {
  double det_g;
  std::vector<double> det_h_list;
};

DetPair det_pair(const AbPair& ab, int n);

/// det H_n in closed form, n >= 0; det H_0 = 1, det H_1 = 2a, and
/// det H_n = 2a det H_{n-1} - b^2 det H_{n-2}.
double det_H(const AbPair& ab, int n);

/// Determinant of G_n with the (1,1) entry replaced by 2*a_prime:
/// det G_n + 2 (a_prime - a) det H_{n-1}. n >= 2.
double det_G_perturbed_corner(const AbPair& ab, int n, double a_prime);

/// Determinant of G_n with diagonal entries 2*a1, 2*a2 at two adjacent sites. n >= 3.
double det_G_perturbed_two_sites(const AbPair& ab, int n, double a1, double a2);

/// Determinant of G_n with two adjacent sites carrying 2*a1 on the diagonal
/// and -b1 on the bond connecting them. n >= 3.
double det_G_perturbed_bond(const AbPair& ab, int n, double a1, double b1);

}  // namespace gupho
