#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maxcorr/correlation.hpp"

namespace maxcorr {

struct SuiteFailure {
  std::uint64_t trial = 0;  // trial index; (suite seed, trial) reproduces it
  std::string description;
  double violation = 0.0;
};

struct SuiteReport {
  std::string suite_name;
  int trials = 0;
  std::vector<SuiteFailure> failures;
  double max_violation = 0.0;
  double tolerance = 0.0;  // failures nonempty iff max_violation > tolerance
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, double>> config;  // parameter echo
};

// Variational route to mu: alternating maximization over unit-norm operator
// vectors orthogonal to the top Schmidt pair, i.e. projected power iteration
// on the deflated realignment. Independent check of the spectral route: this
// function never calls svd. Converges when the relative change drops below
// 1e-12 or max_iters is hit; best value over `restarts` random starts.
double oracle_mu(const BipartiteState& rho, int restarts, int max_iters,
                 std::uint64_t seed);

// Random (state, channel, side) trials checking that no Schmidt coefficient
// grows under a local CPTP map; every 10th trial also checks the two-copy
// form (channel on the B registers of rho (x) rho against mu of one copy).
SuiteReport run_dpi_suite(int trials, int max_dim_a, int max_dim_b,
                          std::uint64_t seed);

// Random two-qubit pairs checking mu(rho (x) sigma) = max(mu(rho),
// mu(sigma)); includes self-products, and documents the mutual-information
// contrast (additive under tensoring where mu is not) in the config echo.
SuiteReport run_tensorization_suite(int trials, std::uint64_t seed);

// Extreme-value checks: range bounds, pure-state dichotomy, the 1 - 9 eps
// bound near maximally entangled states, common-data witnesses on
// decomposable embeddings (and their absence on noisy isotropic states), and
// the binary lower-bound soundness. Violations are recorded as excess over
// each component's allowance, so the report tolerance is 0.
SuiteReport run_extreme_suite(int trials, std::uint64_t seed);

}  // namespace maxcorr
