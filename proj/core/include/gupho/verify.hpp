#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "gupho/params.hpp"

namespace gupho {

struct VerifyOptions {
  bool full = false;  // also run the Nystrom cross-validation (slower)

  // Debug-only: scale closed-form det H by this factor inside the suite to
  // confirm the checks actually bite. 1.0 in normal operation.
  double det_h_scale = 1.0;
};

struct CheckResult {
  std::string suite;
  std::string name;
  double max_err;
  double tolerance;
  bool pass;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

/**
 * Tr rho_T^n rebuilt end to end from the other modules: kernel coefficients
 * feed the cyclic quadratic form, whose determinant and Gaussian moments
 * assemble the traced product of n kernel factors, combined strictly to
 * first order in alpha. The independent route against which the closed-form
 * trace_rho_n is checked. n >= 2 (the n = 2 cyclic quartic moments come from
 * the Wick oracle, where the closed cyclic forms need n >= 3).
 */
FirstOrder trace_rho_n_reassembled(const GupParams& p, double beta, int n);

/// Run the oracle-verification suites: closed-form determinants vs dense LU,
/// closed-form moments vs the Wick expansion, the trace/entropy identities,
/// and (with full = true) the Nystrom spectrum comparison.
VerifyReport run_verification(const VerifyOptions& opts);

/// Human-readable per-check table with max errors and thresholds.
void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace gupho
