#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace recon::verify {

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail; // non-empty on failure
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;
  bool all_pass() const;
  int failures() const;
};

// Each suite sweeps every stencil with m_minus, m_plus >= 0 up to max_m
// intervals (substencils and shifted stencils reached by the identities may
// have a negative extent).  Deterministic; cases are emitted in a fixed
// order regardless of parallel evaluation.

/// Substencil-shift identities between alpha and lambda polynomials, 2 <= M.
SuiteReport identities_suite(int max_m);

/// Root certification: M real roots, one per half-integer window.
SuiteReport roots_suite(int max_m);

/// sum_k sigma = 1 and the error-cancellation identities, as exact
/// rational-function identities, plus half-integer pole exclusion.
SuiteReport consistency_suite(int max_m);

/// weights_at == oracle_weights_at at `samples` deterministic pseudo-random
/// rational points per subdivision.
SuiteReport uniqueness_suite(int max_m, int samples = 20, std::uint64_t seed = 20110821);

/// Certified convexity interval for every positive subdivision, with sample
/// positivity checks.
SuiteReport convexity_suite(int max_m);

std::vector<SuiteReport> run_suites(const std::string& which, int max_m);

} // namespace recon::verify
