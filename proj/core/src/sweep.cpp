#include "gupho/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <iostream>
#include <ostream>

#include "gupho/entropy.hpp"
#include "gupho/errors.hpp"

namespace gupho {

namespace {

// Rows stay in the CSV whatever the ratio; past 0.5 the first-order result
// is no longer trustworthy, so say so once per curve, on the diagnostic
// stream.
class ValidityWatch {
 public:
  explicit ValidityWatch(const char* quantity) : quantity_(quantity) {}

  void observe(double alpha, double t, double ratio) {
    if (ratio > 0.5 && !warned_) {
      warned_ = true;
      std::cerr << "note: " << quantity_ << " first-order correction exceeds half "
                << "the leading term from T=" << format_csv_value(t)
                << " at alpha=" << format_csv_value(alpha)
                << "; treat those rows as out of the expansion's range\n";
    }
  }

  void next_curve() { warned_ = false; }

 private:
  const char* quantity_;
  bool warned_ = false;
};

}  // namespace

void SweepConfig::validate() const {
  if (!(t_min > 0.0)) throw DomainError("sweep: t_min must be positive");
  if (!(t_max > t_min)) throw DomainError("sweep: t_max must exceed t_min");
  if (steps < 2) throw DomainError("sweep: need at least 2 steps");
  params_for(0.0).validate();
  for (double a : alphas)
    if (!(a >= 0.0)) throw DomainError("sweep: alpha must be >= 0");
  for (double g : gammas)
    if (!(g > 0.0) || g == 1.0) throw DomainError("sweep: gamma must be positive and != 1");
}

GupParams SweepConfig::params_for(double alpha) const {
  return GupParams{hbar, mass, omega, kb, alpha};
}

std::vector<double> temperature_grid(const SweepConfig& cfg) {
  std::vector<double> ts(cfg.steps);
  if (cfg.spacing == Spacing::linear) {
    const double dt = (cfg.t_max - cfg.t_min) / (cfg.steps - 1);
    for (int i = 0; i < cfg.steps; ++i) ts[i] = cfg.t_min + dt * i;
  } else {
    const double l0 = std::log(cfg.t_min);
    const double dl = (std::log(cfg.t_max) - l0) / (cfg.steps - 1);
    for (int i = 0; i < cfg.steps; ++i) ts[i] = std::exp(l0 + dl * i);
  }
  ts.back() = cfg.t_max;  // pin the endpoint against log/exp roundoff
  return ts;
}

std::string format_csv_value(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

void write_purity_csv(const SweepConfig& cfg, std::ostream& out) {
  cfg.validate();
  const auto ts = temperature_grid(cfg);
  ValidityWatch watch("purity");
  out << "T,alpha,purity,validity_ratio\n";
  for (double alpha : cfg.alphas) {
    const GupParams p = cfg.params_for(alpha);
    watch.next_curve();
    for (double t : ts) {
      const FirstOrder val = purity_parts(p, t);
      watch.observe(alpha, t, val.validity_ratio());
      out << format_csv_value(t) << ',' << format_csv_value(alpha) << ','
          << format_csv_value(val.value()) << ','
          << format_csv_value(val.validity_ratio()) << '\n';
    }
  }
}

void write_entropy_csv(const SweepConfig& cfg, std::ostream& out) {
  cfg.validate();
  const auto ts = temperature_grid(cfg);
  ValidityWatch watch("entropy");
  out << "T,alpha,s_von,validity_ratio\n";
  for (double alpha : cfg.alphas) {
    const GupParams p = cfg.params_for(alpha);
    watch.next_curve();
    for (double t : ts) {
      const EntropyValue s = von_neumann(p, t);
      watch.observe(alpha, t, s.validity_ratio);
      out << format_csv_value(t) << ',' << format_csv_value(alpha) << ','
          << format_csv_value(s.value) << ','
          << format_csv_value(s.validity_ratio) << '\n';
    }
  }
}

void write_renyi_csv(const SweepConfig& cfg, std::ostream& out) {
  cfg.validate();
  const auto ts = temperature_grid(cfg);
  out << "T,alpha,gamma,s_renyi\n";
  for (double alpha : cfg.alphas) {
    const GupParams p = cfg.params_for(alpha);
    for (double gamma : cfg.gammas) {
      const std::string gamma_str =
          std::isinf(gamma) ? "inf" : format_csv_value(gamma);
      for (double t : ts) {
        const EntropyValue s = renyi(p, t, gamma);
        out << format_csv_value(t) << ',' << format_csv_value(alpha) << ','
            << gamma_str << ',' << format_csv_value(s.value) << '\n';
      }
    }
  }
}

}  // namespace gupho
