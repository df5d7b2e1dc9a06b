#include "bssc/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <vector>

namespace bssc {

BinaryDist binary_stationary(double q00, double q11) {
  const double denom = 2.0 - q00 - q11;
  if (std::fabs(denom) < 1e-15) {
    // q00 = q11 = 1: two absorbing states, every distribution is stationary.
    throw DegeneratePolicyError("output chain is reducible; no unique stationary law");
  }
  return BinaryDist(Prob((1.0 - q11) / denom));
}

RateCost single_letter_rate(const ChannelKernel& kernel, const FeedbackPolicy& policy) {
  // Induced output chain P(b | b_prev) = sum_a P(a|b_prev) P(b|a,b_prev).
  const double k00 = policy(0, 0) * kernel(0, 0, 0) + policy(1, 0) * kernel(0, 1, 0);
  const double k11 = policy(0, 1) * kernel(1, 0, 1) + policy(1, 1) * kernel(1, 1, 1);
  const BinaryDist pi = binary_stationary(k00, k11);
  const double cost = expected_cost(policy, pi);

  const double h_out = pi(0) * binary_entropy(Prob(k00)) + pi(1) * binary_entropy(Prob(k11));
  double h_cond = 0.0;
  for (int bp = 0; bp < 2; ++bp)
    for (int a = 0; a < 2; ++a)
      h_cond += pi(bp) * policy(a, bp) * binary_entropy(Prob(kernel(0, a, bp)));
  return RateCost{h_out - h_cond, cost};
}

namespace {

struct GridWindow {
  double lo0, hi0, lo1, hi1;
};

}  // namespace

OracleReport grid_capacity(const ChannelKernel& kernel,
                           const std::optional<CostConstraint>& constraint,
                           double resolution, int refine_rounds) {
  if (!(resolution > 0.0 && resolution <= 0.5))
    throw ValidationError("grid resolution must lie in (0, 0.5]");
  if (refine_rounds < 0) throw ValidationError("refine_rounds must be >= 0");

  const auto t_start = std::chrono::steady_clock::now();
  OracleReport report;

  struct Candidate {
    bool found = false;
    double rate = 0.0, cost = 0.0, p0 = 0.0, p1 = 0.0;
  };
  Candidate incumbent;
  GridWindow win{0.0, 1.0, 0.0, 1.0};
  double res = resolution;

  for (int round = 0; round <= refine_rounds; ++round) {
    // An explicitly supplied tolerance is the band, as-is; otherwise the
    // band tracks the current resolution and tightens with each round.
    const double band = constraint ? constraint->tolerance.value_or(res) : 0.0;
    auto axis_points = [res](double lo, double hi, double extra) {
      std::vector<double> pts;
      for (double v = lo; v < hi - 1e-15; v += res) pts.push_back(v);
      pts.push_back(hi);
      if (extra >= lo && extra <= hi) pts.push_back(extra);
      return pts;
    };
    const auto pts0 = axis_points(win.lo0, win.hi0, incumbent.p0);
    const auto pts1 = axis_points(win.lo1, win.hi1, incumbent.p1);
    // Fresh selection each round; ties go to the lexicographically smallest
    // point so the result does not depend on evaluation order.
    Candidate best;
    for (double p0 : pts0) {
      for (double p1 : pts1) {
        const RateCost rc =
            single_letter_rate(kernel, FeedbackPolicy(Prob(p0), Prob(p1)));
        ++report.evaluations;
        if (constraint) {
          const double k = constraint->kappa.value();
          const bool ok = constraint->kind == CostConstraintKind::equality
                              ? std::fabs(rc.cost - k) <= band
                              : rc.cost <= k + band;
          if (!ok) continue;
        }
        const bool better =
            !best.found || rc.rate > best.rate ||
            (rc.rate == best.rate && (p0 < best.p0 || (p0 == best.p0 && p1 < best.p1)));
        if (better) best = Candidate{true, rc.rate, rc.cost, p0, p1};
      }
    }
    if (!best.found) {
      if (!incumbent.found)
        throw ConstraintInfeasibleError(
            "no grid point satisfies the cost constraint at resolution " +
            std::to_string(res));
      break;  // the tightened band left the window; keep the previous round
    }
    incumbent = best;
    report.grid_resolution = res;
    if (round < refine_rounds) {
      const double half = 1.5 * res;
      win = GridWindow{std::max(0.0, incumbent.p0 - half), std::min(1.0, incumbent.p0 + half),
                       std::max(0.0, incumbent.p1 - half), std::min(1.0, incumbent.p1 + half)};
      res /= 10.0;
    }
  }
  report.best_value = incumbent.rate;
  report.best_point = {incumbent.p0, incumbent.p1};
  report.constraint_residual =
      constraint ? std::fabs(incumbent.cost - constraint->kappa.value()) : 0.0;
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return report;
}

template <int N>
std::uint64_t power_iteration_stationary(const std::array<std::array<double, N>, N>& t,
                                         std::array<double, N>& pi, double tol,
                                         std::uint64_t max_iters) {
  pi.fill(1.0 / N);
  std::array<double, N> next{};
  for (std::uint64_t it = 1; it <= max_iters; ++it) {
    next.fill(0.0);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) next[j] += pi[i] * t[i][j];
    double diff = 0.0;
    for (int j = 0; j < N; ++j) diff += std::fabs(next[j] - pi[j]);
    pi = next;
    if (diff <= tol) return it;
  }
  throw DegeneratePolicyError("power iteration did not converge");
}

template std::uint64_t power_iteration_stationary<2>(
    const std::array<std::array<double, 2>, 2>&, std::array<double, 2>&, double,
    std::uint64_t);
template std::uint64_t power_iteration_stationary<4>(
    const std::array<std::array<double, 4>, 4>&, std::array<double, 4>&, double,
    std::uint64_t);

EquivalenceReport verify_nofb_equivalence(const BsscParams& params, Prob kappa) {
  const MarkovPolicy markov = markov_nofb_policy(params, kappa);
  const ChannelKernel kernel = bssc_kernel(params);

  // Joint chain on states (a, b), packed as 2a + b.
  std::array<std::array<double, 4>, 4> t{};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int a2 = 0; a2 < 2; ++a2)
        for (int b2 = 0; b2 < 2; ++b2)
          t[2 * a + b][2 * a2 + b2] = markov(a2, a) * kernel(b2, a2, b);

  std::array<double, 4> pi{};
  const std::uint64_t iters = power_iteration_stationary<4>(t, pi);

  // P(a_next | b) from the stationary joint, then against [[k,1-k],[1-k,k]].
  const double k = kappa.value();
  const Matrix2 target_policy = Matrix2::symmetric(Prob(k));
  const Matrix2 target_output = Matrix2::symmetric(Prob(lambda_of(params, kappa)));
  double dev_policy = 0.0, dev_output = 0.0;
  for (int b = 0; b < 2; ++b) {
    const double pb = pi[2 * 0 + b] + pi[2 * 1 + b];
    for (int a2 = 0; a2 < 2; ++a2) {
      double num = 0.0;
      for (int a = 0; a < 2; ++a) num += pi[2 * a + b] * markov(a2, a);
      const double p_a2_given_b = num / pb;
      dev_policy = std::max(dev_policy, std::fabs(p_a2_given_b - target_policy(b, a2)));
    }
    for (int b2 = 0; b2 < 2; ++b2) {
      double p_b2_given_b = 0.0;
      for (int a2 = 0; a2 < 2; ++a2) {
        double num = 0.0;
        for (int a = 0; a < 2; ++a) num += pi[2 * a + b] * markov(a2, a);
        p_b2_given_b += (num / pb) * kernel(b2, a2, b);
      }
      dev_output = std::max(dev_output, std::fabs(p_b2_given_b - target_output(b, b2)));
    }
  }
  return EquivalenceReport{dev_policy, dev_output, iters};
}

}  // namespace bssc
