#include "gupho/nystrom.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include <Eigen/Eigenvalues>

#include "gupho/thermal_kernel.hpp"

namespace gupho {

namespace {

struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};

Quadrature trapezoid_rule(double half_width, int n) {
  Quadrature q;
  q.nodes.resize(n);
  q.weights.assign(n, 0.0);
  const double h = 2.0 * half_width / (n - 1);
  for (int i = 0; i < n; ++i) {
    q.nodes[i] = -half_width + h * i;
    q.weights[i] = (i == 0 || i == n - 1) ? 0.5 * h : h;
  }
  return q;
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n,
// then scaled to [-L, L].
Quadrature gauss_legendre_rule(double half_width, int n) {
  Quadrature q;
  q.nodes.resize(n);
  q.weights.resize(n);
  const int mid = (n + 1) / 2;
  for (int i = 0; i < mid; ++i) {
    double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {  // Legendre recurrence up to P_n(z)
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / pp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    const double wgt = 2.0 / ((1.0 - z * z) * pp * pp);
    q.nodes[i] = -half_width * z;
    q.nodes[n - 1 - i] = half_width * z;
    q.weights[i] = half_width * wgt;
    q.weights[n - 1 - i] = half_width * wgt;
  }
  return q;
}

}  // namespace

GridSpec default_grid(const GupParams& p) {
  p.validate();
  return GridSpec{10.0 * std::sqrt(p.hbar / (p.mass * p.omega)), 400,
                  QuadScheme::trapezoid};
}

Eigen::MatrixXd discretize(const GupParams& p, double beta, const GridSpec& grid) {
  grid.validate();

  const double edge =
      std::abs(euclidean_kernel(p, beta, grid.half_width, grid.half_width).amplitude);
  if (!(edge < 1e-12))
    throw GridError("grid-too-small: kernel magnitude at the boundary is " +
                    std::to_string(edge));

  const Quadrature q = grid.scheme == QuadScheme::trapezoid
                           ? trapezoid_rule(grid.half_width, grid.points)
                           : gauss_legendre_rule(grid.half_width, grid.points);

  const int n = grid.points;
  std::vector<double> sqw(n);
  for (int i = 0; i < n; ++i) sqw[i] = std::sqrt(q.weights[i]);

  Eigen::MatrixXd m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double val =
          sqw[i] * euclidean_kernel(p, beta, q.nodes[i], q.nodes[j]).amplitude * sqw[j];
      m(i, j) = val;
      m(j, i) = val;
    }
  }
  return m;
}

std::vector<double> eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() != m.cols()) throw DomainError("eigenvalues: matrix must be square");
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale)
    throw DomainError("eigenvalues: matrix must be symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();  // ascending
  std::vector<double> out(ev.size());
  for (int i = 0; i < ev.size(); ++i) out[i] = ev(ev.size() - 1 - i);
  return out;
}

SpectrumComparison compare_spectrum(const GupParams& p, double beta,
                                    const GridSpec& grid, int n_compare) {
  if (n_compare < 1) throw DomainError("compare_spectrum: n_compare must be >= 1");

  const SpectrumSlice closed = spectrum(p, beta, n_compare - 1);
  if (closed.n_valid < n_compare - 1)
    throw DomainError(
        "compare_spectrum: n_compare exceeds the validity range of the closed-form spectrum");

  const std::vector<double> numeric = eigenvalues(discretize(p, beta, grid));

  SpectrumComparison cmp;
  cmp.max_abs_diff = 0.0;
  for (int n = 0; n < n_compare; ++n) {
    cmp.numeric.push_back(numeric[n]);
    cmp.closed.push_back(closed.lambdas[n]);
    cmp.abs_diff.push_back(std::abs(numeric[n] - closed.lambdas[n]));
    cmp.max_abs_diff = std::max(cmp.max_abs_diff, cmp.abs_diff.back());
  }
  return cmp;
}

}  // namespace gupho
