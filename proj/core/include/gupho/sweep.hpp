#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gupho/params.hpp"

namespace gupho {

enum class Spacing { linear, log };

/// Temperature sweep over a list of alpha values (and Renyi orders, where
/// relevant). Defaults use the unit constants hbar = m = omega = kb = 1.
struct SweepConfig {
  double t_min = 0.1;
  double t_max = 100.0;
  int steps = 200;
  Spacing spacing = Spacing::linear;
  std::vector<double> alphas;  // one curve per entry
  std::vector<double> gammas;  // Renyi orders; +infinity allowed
  double hbar = 1.0;
  double mass = 1.0;
  double omega = 1.0;
  double kb = 1.0;

  void validate() const;
  GupParams params_for(double alpha) const;
};

/// The temperature grid a sweep visits, in ascending order.
std::vector<double> temperature_grid(const SweepConfig& cfg);

/// One double rendered with 12 significant digits ("%.12g"); the fixed CSV
/// float format, so identical inputs give byte-identical output.
std::string format_csv_value(double v);

// CSV emitters. Header row always present; rows ordered alpha-major
// (then gamma, then ascending T) so each curve is contiguous.

/// Columns: T,alpha,purity,validity_ratio
void write_purity_csv(const SweepConfig& cfg, std::ostream& out);

/// Columns: T,alpha,s_von,validity_ratio
void write_entropy_csv(const SweepConfig& cfg, std::ostream& out);

/// Columns: T,alpha,gamma,s_renyi ("inf" for the infinite order)
void write_renyi_csv(const SweepConfig& cfg, std::ostream& out);

}  // namespace gupho
