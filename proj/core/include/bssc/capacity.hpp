#pragma once

#include <optional>

#include "bssc/channel.hpp"
#include "bssc/policy.hpp"

namespace bssc {

// Capacity value together with everything that achieves it.
struct CapacityResult {
  double capacity;  // bits per channel use
  double kappa;     // cost level (= stationary probability of state 0)
  double lambda;    // output-chain symmetry parameter
  FeedbackPolicy input;
  Matrix2 output_kernel;        // [[lambda, 1-lambda], [1-lambda, lambda]]
  BinaryDist output_marginal;   // (0.5, 0.5)
  bool degenerate = false;      // alpha + beta = 1: zero capacity at every kappa
  std::optional<MarkovPolicy> markov_input;  // attached by capacity_nofb
};

// lambda = alpha*kappa + (1-kappa)*(1-beta); the probability that the output
// repeats its previous value under the symmetric optimal input.
double lambda_of(const BsscParams& params, Prob kappa);

// Capacity with feedback under the equality cost constraint E{c} = kappa:
//   C(kappa) = H(lambda) - kappa*H(alpha) - (1-kappa)*H(beta),
// achieved by the input [[kappa, 1-kappa], [1-kappa, kappa]] (which satisfies
// P(0|0) + P(0|1) = 1) and the doubly stochastic output kernel in lambda.
// C(0) = C(1) = 0 exactly; the curve is concave on [0,1].
CapacityResult capacity_fb_cost(const BsscParams& params, Prob kappa);

// Inequality-constraint version: the constraint binds only up to kappa_max,
// beyond it the unconstrained optimum is admissible, so the curve plateaus.
CapacityResult capacity_fb_cost_inequality(const BsscParams& params, Prob kappa);

// Optimal time sharing between the two arms:
//   kappa* = (beta(1+2^e) - 1) / ((alpha+beta-1)(1+2^e)),
//   e = (H(beta) - H(alpha)) / (alpha+beta-1).
// Stationary point of C(kappa); alpha = beta gives exactly 1/2.
// Throws SingularChannelError when alpha + beta = 1.
Prob kappa_star(const BsscParams& params);

// Largest cost level at which the inequality constraint still binds;
// coincides with kappa_star. C(kappa) is concave nondecreasing on [0, kappa_max].
Prob kappa_max(const BsscParams& params);

// Unconstrained capacity with feedback: capacity_fb_cost at kappa_star.
// For the alpha + beta = 1 family returns the flagged zero-capacity result
// with kappa reported as 0.5 instead of throwing.
CapacityResult capacity_fb(const BsscParams& params);

// The symmetric first-order Markov input, entries
//   (1-kappa-gamma)/(1-2gamma) and (kappa-gamma)/(1-2gamma),
//   gamma = alpha*kappa + beta*(1-kappa),
// which induces the feedback-optimal P(a|b_prev) without feedback.
// Throws SingularChannelError when |1-2gamma| <= 1e-9 and
// InfeasiblePolicyError (naming the entry) when an entry leaves [0,1].
MarkovPolicy markov_nofb_policy(const BsscParams& params, Prob kappa);

// Capacity without feedback; equal to the feedback capacity, with the
// achieving Markov input attached. kappa defaults to kappa_star.
CapacityResult capacity_nofb(const BsscParams& params, std::optional<Prob> kappa = {});

// P(0|0)P(0) + P(1|1)(1-P(0)): the cost constraint forces this combination
// of the output kernel and output marginal to equal lambda.
double output_balance_lambda(const Matrix2& output_kernel, const BinaryDist& output_marginal);

// Stationarity of H(B|B_prev) in q_b = P(1|1) has roots q_b = lambda and the
// trivial q_b = 1; the non-trivial root makes the output kernel symmetric
// and the output marginal uniform.
struct QbSolution {
  double q_b;                  // = lambda (the trivial root 1 is never returned)
  double p00;                  // P(0|0) reconstructed from the balance; = lambda
  BinaryDist output_marginal;  // = (0.5, 0.5)
  static constexpr double trivial_root = 1.0;
};
QbSolution solve_qb(const BsscParams& params, Prob kappa);

}  // namespace bssc
