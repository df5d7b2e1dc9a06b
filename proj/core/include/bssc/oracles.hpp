#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "bssc/capacity.hpp"
#include "bssc/channel.hpp"

namespace bssc {

struct RateCost {
  double rate;  // bits per use at the stationary output law
  double cost;  // E{ 1[a = b_prev] } under the same law
};

// Single-letter rate H(B|B_prev) - H(B|A,B_prev) of a kernel driven by a
// feedback policy, evaluated at the stationary law of the induced output
// chain (exact two-state formula). Throws DegeneratePolicyError when the
// chain has no unique stationary law.
RateCost single_letter_rate(const ChannelKernel& kernel, const FeedbackPolicy& policy);

enum class CostConstraintKind { equality, inequality };

struct CostConstraint {
  Prob kappa;
  // Omitted: the acceptance band is the current grid resolution (shrinks
  // with each refinement round). Explicitly given: used as-is, so an exact 0
  // demands grid points exactly on the constraint curve.
  std::optional<double> tolerance;
  CostConstraintKind kind = CostConstraintKind::equality;
};

struct OracleReport {
  double best_value = 0.0;           // bits per use; lower bound on capacity
  std::array<double, 2> best_point{};  // (P(a=0|b_prev=0), P(a=0|b_prev=1))
  double grid_resolution = 0.0;      // final resolution
  double constraint_residual = 0.0;  // |cost - kappa| at the winner (0 if unconstrained)
  std::uint64_t evaluations = 0;
  double wall_time_s = 0.0;
};

// Exhaustive grid search over feedback policies (p0, p1) in [0,1]^2 with
// iterative refinement: each round shrinks the window around the incumbent
// to +-resolution and divides the resolution by 10. Deterministic: ties go
// to the lexicographically smallest (p0, p1).
OracleReport grid_capacity(const ChannelKernel& kernel,
                           const std::optional<CostConstraint>& constraint,
                           double resolution, int refine_rounds);

// Residuals of the no-feedback construction: drive the kernel with the
// Markov input, find the stationary law of the joint (A,B) chain by power
// iteration (to 1e-14), and compare the induced P(a|b_prev) and output
// kernel against their feedback-optimal counterparts.
struct EquivalenceReport {
  double policy_deviation;  // max |P(a|b_prev) - [[k,1-k],[1-k,k]]|
  double output_deviation;  // max |P(b|b_prev) - [[l,1-l],[1-l,l]]|
  std::uint64_t iterations;
};
EquivalenceReport verify_nofb_equivalence(const BsscParams& params, Prob kappa);

// Stationary law of a two-state chain [[q00,1-q00],[1-q11,q11]] by the exact
// binary-chain formula pi0 = (1-q11)/(2-q00-q11).
BinaryDist binary_stationary(double q00, double q11);

// Stationary row vector of a small row-stochastic matrix by power iteration;
// returns the number of iterations used. Throws DegeneratePolicyError if the
// L1 increment has not fallen below tol within max_iters.
template <int N>
std::uint64_t power_iteration_stationary(const std::array<std::array<double, N>, N>& t,
                                         std::array<double, N>& pi, double tol = 1e-14,
                                         std::uint64_t max_iters = 1000000);

}  // namespace bssc
