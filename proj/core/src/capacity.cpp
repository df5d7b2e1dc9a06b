#include "bssc/capacity.hpp"

#include <cmath>
#include <string>

namespace bssc {

namespace {

constexpr double kGammaSingularTol = 1e-9;

CapacityResult make_result(const BsscParams& params, double kappa) {
  const double lam = lambda_of(params, Prob(kappa));
  const double cap = binary_entropy(Prob(lam)) - kappa * binary_entropy(Prob(params.alpha())) -
                     (1.0 - kappa) * binary_entropy(Prob(params.beta()));
  return CapacityResult{
      .capacity = cap,
      .kappa = kappa,
      .lambda = lam,
      .input = FeedbackPolicy(Matrix2::symmetric(Prob(kappa))),
      .output_kernel = Matrix2::symmetric(Prob(lam)),
      .output_marginal = BinaryDist::uniform(),
      .degenerate = params.sum_degenerate(),
      .markov_input = std::nullopt,
  };
}

}  // namespace

double lambda_of(const BsscParams& params, Prob kappa) {
  const double k = kappa.value();
  return params.alpha() * k + (1.0 - k) * (1.0 - params.beta());
}

CapacityResult capacity_fb_cost(const BsscParams& params, Prob kappa) {
  return make_result(params, kappa.value());
}

CapacityResult capacity_fb_cost_inequality(const BsscParams& params, Prob kappa) {
  if (params.sum_degenerate()) return capacity_fb(params);
  const double km = kappa_max(params).value();
  return make_result(params, std::min(kappa.value(), km));
}

Prob kappa_star(const BsscParams& params) {
  if (params.sum_degenerate())
    throw SingularChannelError(
        "alpha + beta = 1: capacity is 0 for every kappa, time sharing undefined");
  const double a = params.alpha();
  const double b = params.beta();
  const double e =
      (binary_entropy(Prob(b)) - binary_entropy(Prob(a))) / (a + b - 1.0);
  const double t = 1.0 + std::exp2(e);
  return Prob((b * t - 1.0) / ((a + b - 1.0) * t));
}

Prob kappa_max(const BsscParams& params) { return kappa_star(params); }

CapacityResult capacity_fb(const BsscParams& params) {
  if (params.sum_degenerate()) {
    // Any kappa is optimal here; 0.5 keeps the reported policy symmetric.
    CapacityResult r = make_result(params, 0.5);
    r.degenerate = true;
    return r;
  }
  return make_result(params, kappa_star(params).value());
}

MarkovPolicy markov_nofb_policy(const BsscParams& params, Prob kappa) {
  const double k = kappa.value();
  const double gamma = params.alpha() * k + params.beta() * (1.0 - k);
  const double denom = 1.0 - 2.0 * gamma;
  // the extra 1e-15 absorbs the rounding of gamma itself at the threshold
  if (std::fabs(denom) <= kGammaSingularTol + 1e-15)
    throw SingularChannelError("gamma = alpha*kappa + beta*(1-kappa) = 1/2 (within 1e-9): "
                               "Markov input undefined");
  const double stay = (1.0 - k - gamma) / denom;
  const double move = (k - gamma) / denom;
  auto in_range = [](double v) { return v >= -kProbSlack && v <= 1.0 + kProbSlack; };
  if (!in_range(stay) || !in_range(move)) {
    const double bad = in_range(stay) ? move : stay;
    const char* which = in_range(stay) ? "(kappa-gamma)/(1-2gamma)" : "(1-kappa-gamma)/(1-2gamma)";
    throw InfeasiblePolicyError("Markov input entry " + std::string(which) + " = " +
                                std::to_string(bad) + " outside [0,1] at kappa = " +
                                std::to_string(k));
  }
  return MarkovPolicy(Matrix2(Prob(stay), Prob(move), Prob(move), Prob(stay)));
}

CapacityResult capacity_nofb(const BsscParams& params, std::optional<Prob> kappa) {
  const Prob k = kappa ? *kappa : kappa_star(params);
  CapacityResult r = make_result(params, k.value());
  r.markov_input = markov_nofb_policy(params, k);
  return r;
}

double output_balance_lambda(const Matrix2& output_kernel, const BinaryDist& output_marginal) {
  return output_kernel(0, 0) * output_marginal(0) +
         output_kernel(1, 1) * (1.0 - output_marginal(0));
}

QbSolution solve_qb(const BsscParams& params, Prob kappa) {
  const double lam = lambda_of(params, kappa);
  const double qb = lam;  // non-trivial stationary point; q_b = 1 discarded
  const double pb0 = (1.0 + lam - 2.0 * qb) / (2.0 * (1.0 - qb));
  const double p00 = (2.0 * lam - (1.0 + lam) * qb) / (1.0 + lam - 2.0 * qb);
  return QbSolution{qb, p00, BinaryDist(Prob(pb0))};
}

}  // namespace bssc
