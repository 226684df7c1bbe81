#pragma once

#include <vector>

#include <Eigen/Core>

#include "gupho/entropy.hpp"
#include "gupho/params.hpp"

namespace gupho {

enum class QuadScheme { trapezoid, gauss_legendre };

/// Quadrature grid on [-half_width, half_width] for the integral-operator
/// eigenproblem of the thermal kernel.
struct GridSpec {
  double half_width;
  int points;
  QuadScheme scheme = QuadScheme::trapezoid;

  void validate() const {
    if (!(half_width > 0.0)) throw DomainError("GridSpec: half_width must be positive");
    if (points < 16) throw DomainError("GridSpec: need at least 16 points");
    if (scheme == QuadScheme::trapezoid && points % 2 != 0)
      throw DomainError("GridSpec: trapezoid point count must be even");
  }
};

/// Default grid: half_width = 10 sqrt(hbar/(m omega)), 400 trapezoid points.
/// Covers the kernel width comfortably for x >= 0.2.
GridSpec default_grid(const GupParams& p);

/**
 * Nystrom discretization M_ij = sqrt(w_i) rho_T[q_i, q_j] sqrt(w_j).
 * Symmetric by construction, so its eigenvalues approximate those of the
 * kernel as an integral operator. Throws GridError ("grid-too-small") when
 * |rho_T[L, L]| >= 1e-12, i.e. the kernel is not negligible at the edge.
 */
Eigen::MatrixXd discretize(const GupParams& p, double beta, const GridSpec& grid);

/// All eigenvalues of a symmetric matrix, sorted descending.
std::vector<double> eigenvalues(const Eigen::MatrixXd& m);

struct SpectrumComparison {
  std::vector<double> numeric;   // Nystrom eigenvalues, descending
  std::vector<double> closed;    // first-order closed-form lambda_n
  std::vector<double> abs_diff;  // per-index |numeric - closed|
  double max_abs_diff;
};

/// Compare the top n_compare Nystrom eigenvalues against the closed-form
/// spectrum. n_compare must not exceed the closed form's own validity range.
SpectrumComparison compare_spectrum(const GupParams& p, double beta,
                                    const GridSpec& grid, int n_compare);

}  // namespace gupho
