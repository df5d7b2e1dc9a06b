#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bssc/channel.hpp"

namespace bssc {

struct VerifyOptions {
  // Both set: verify this pair. Neither: sweep the default 5x5 canonical grid.
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<double> kappa;  // extra constrained check point
  bool run_bruteforce = true;
  // Horizon 0..2. The wide comparison class is the joint input-output
  // history up to horizon 1 and the full output history at horizon 2 (the
  // joint class at horizon 2 exceeds the evaluation budget by design).
  int bruteforce_horizon = 1;
  int bruteforce_grid_points = 11;
  // Test hook: biases the closed-form lambda so a deliberately wrong formula
  // is seen to fail. 0 in normal operation.
  double lambda_perturbation = 0.0;
};

struct VerifyCheck {
  std::string name;
  double residual;
  double tolerance;
  bool pass;
};

struct VerifyReport {
  std::vector<VerifyCheck> checks;
  bool pass = true;
  double wall_time_s = 0.0;
};

// Runs the independent oracles against the closed forms: unconstrained and
// constrained grid search, argmax-vs-kappa*, the no-feedback equivalence
// residuals, the output-balance identities, and a short-horizon brute-force
// sanity check. Aggregate pass = every check within its tolerance.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace bssc
