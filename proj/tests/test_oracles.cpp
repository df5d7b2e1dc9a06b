#include <doctest.h>

#include <cmath>

#include "anchors.hpp"
#include "bssc/capacity.hpp"
#include "bssc/oracles.hpp"
#include "bssc/rng.hpp"

using namespace bssc;

namespace {
const BsscParams kReference(0.92, 0.79);
}

TEST_CASE("single-letter rate matches the closed form at the optimum") {
  const ChannelKernel kernel = bssc_kernel(kReference);
  const RateCost rc =
      single_letter_rate(kernel, FeedbackPolicy(Matrix2::symmetric(Prob(0.71))));
  CHECK(rc.rate == doctest::Approx(anchors::C_071).epsilon(1e-10));
  CHECK(rc.cost == doctest::Approx(0.71).epsilon(1e-12));
}

TEST_CASE("single-letter rate on the memoryless reduction") {
  const ChannelKernel kernel = bssc_kernel(BsscParams(0.9, 0.9));
  const RateCost rc =
      single_letter_rate(kernel, FeedbackPolicy(Matrix2::symmetric(Prob(0.5))));
  CHECK(rc.rate == doctest::Approx(anchors::BSC_09).epsilon(1e-12));
  CHECK(rc.cost == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("input determined by the conditioning symbol carries nothing") {
  const ChannelKernel kernel = bssc_kernel(kReference);
  const RateCost rc = single_letter_rate(kernel, FeedbackPolicy(Matrix2(1, 0, 0, 1)));
  CHECK(rc.rate == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(rc.cost == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("reducible output chain is rejected") {
  // output sticks to its previous value regardless of the input
  std::array<std::array<std::array<double, 2>, 2>, 2> p{};
  for (int a = 0; a < 2; ++a) {
    p[0][a][0] = 1.0;
    p[1][a][0] = 0.0;
    p[0][a][1] = 0.0;
    p[1][a][1] = 1.0;
  }
  CHECK_THROWS_AS(
      single_letter_rate(ChannelKernel(p), FeedbackPolicy(Matrix2::symmetric(Prob(0.5)))),
      DegeneratePolicyError);
}

TEST_CASE("unconstrained grid search agrees with the closed form") {
  const OracleReport r = grid_capacity(bssc_kernel(kReference), std::nullopt, 0.01, 3);
  CHECK(std::fabs(r.best_value - anchors::C_FB) <= 1e-4);
  CHECK(std::fabs(r.best_point[0] - anchors::KAPPA_STAR) <= 1e-3);
  CHECK(std::fabs(r.best_point[1] - (1.0 - anchors::KAPPA_STAR)) <= 1e-3);
  CHECK(r.evaluations > 10000);
  CHECK(r.grid_resolution == doctest::Approx(1e-5));
}

TEST_CASE("constrained grid search agrees with the closed form") {
  const OracleReport r = grid_capacity(
      bssc_kernel(kReference), CostConstraint{Prob(0.71), std::nullopt}, 0.01, 3);
  CHECK(std::fabs(r.best_value - anchors::C_071) <= 1e-4);
  // winner sits on the P(0|0) + P(0|1) = 1 line
  CHECK(std::fabs(r.best_point[0] + r.best_point[1] - 1.0) <= 2e-3);
  CHECK(r.constraint_residual <= 1e-4);
}

TEST_CASE("explicit zero tolerance on a coarse grid is infeasible") {
  CHECK_THROWS_AS(grid_capacity(bssc_kernel(kReference), CostConstraint{Prob(0.71), 0.0}, 0.5, 0),
                  ConstraintInfeasibleError);
}

TEST_CASE("inequality constraint plateaus beyond kappa_max") {
  const OracleReport r = grid_capacity(
      bssc_kernel(kReference),
      CostConstraint{Prob(0.9), std::nullopt, CostConstraintKind::inequality}, 0.01, 3);
  CHECK(std::fabs(r.best_value - anchors::C_FB) <= 1e-4);
}

TEST_CASE("refinement never loses value") {
  const ChannelKernel kernel = bssc_kernel(kReference);
  double prev = -1.0;
  for (int rounds = 0; rounds <= 3; ++rounds) {
    const OracleReport r = grid_capacity(kernel, std::nullopt, 0.05, rounds);
    CHECK(r.best_value >= prev - 1e-15);
    prev = r.best_value;
  }
}

TEST_CASE("every sampled policy stays below the capacity") {
  const ChannelKernel kernel = bssc_kernel(kReference);
  const double cap = capacity_fb(kReference).capacity;
  SplitMix64 rng(101);
  for (int i = 0; i < 10000; ++i) {
    const RateCost rc =
        single_letter_rate(kernel, FeedbackPolicy(Prob(rng.uniform()), Prob(rng.uniform())));
    CHECK(rc.rate <= cap + 1e-12);
  }
}

TEST_CASE("no-feedback equivalence residuals") {
  const EquivalenceReport at_star = verify_nofb_equivalence(kReference, kappa_star(kReference));
  CHECK(at_star.policy_deviation <= 1e-9);
  CHECK(at_star.output_deviation <= 1e-9);

  const EquivalenceReport at_071 = verify_nofb_equivalence(kReference, Prob(0.71));
  CHECK(at_071.policy_deviation <= 1e-9);
  CHECK(at_071.output_deviation <= 1e-9);

  const EquivalenceReport flat = verify_nofb_equivalence(BsscParams(0.9, 0.9), Prob(0.5));
  CHECK(flat.policy_deviation <= 1e-12);
  CHECK(flat.output_deviation <= 1e-12);

  CHECK_THROWS_AS(verify_nofb_equivalence(kReference, Prob(0.1)), InfeasiblePolicyError);
}

TEST_CASE("equivalence holds wherever the Markov matrix is feasible") {
  SplitMix64 rng(103);
  int feasible = 0;
  for (int i = 0; i < 60; ++i) {
    const double a = 0.51 + 0.45 * rng.uniform();
    const double b = 0.51 + (a - 0.51) * rng.uniform();
    const double k = rng.uniform();
    try {
      const EquivalenceReport eq = verify_nofb_equivalence(BsscParams(a, b), Prob(k));
      CHECK(eq.policy_deviation <= 1e-9);
      CHECK(eq.output_deviation <= 1e-9);
      ++feasible;
    } catch (const InfeasiblePolicyError&) {
    } catch (const SingularChannelError&) {
    }
  }
  CHECK(feasible > 10);
}

TEST_CASE("grid capacity confirms orbit invariance") {
  // both-arm flip: same capacity at the same cost level
  const OracleReport raw = grid_capacity(bssc_kernel(BsscParams(0.08, 0.79)), std::nullopt,
                                         0.02, 2);
  const OracleReport canon = grid_capacity(bssc_kernel(BsscParams(0.92, 0.21)), std::nullopt,
                                           0.02, 2);
  CHECK(std::fabs(raw.best_value - canon.best_value) <= 2.0 * 0.02);
  CHECK(std::fabs(raw.best_value - anchors::C_FB_008_079) <= 1e-3);
  // cost reversal: kappa re-maps to 1 - kappa
  const OracleReport rev = grid_capacity(
      bssc_kernel(BsscParams(0.79, 0.92)), CostConstraint{Prob(0.29), std::nullopt}, 0.01, 2);
  CHECK(std::fabs(rev.best_value - anchors::C_071) <= 1e-3);
}

TEST_CASE("anti-aligned closed form matches its oracle") {
  const BsscParams anti(0.08, 0.79);
  CHECK(kappa_star(anti).value() ==
        doctest::Approx(anchors::KAPPA_STAR_008_079).epsilon(1e-12));
  CHECK(capacity_fb(anti).capacity ==
        doctest::Approx(anchors::C_FB_008_079).epsilon(1e-12));
  const OracleReport grid = grid_capacity(bssc_kernel(anti), std::nullopt, 0.01, 3);
  CHECK(std::fabs(grid.best_value - capacity_fb(anti).capacity) <= 1e-4);
}

TEST_CASE("binary stationary law") {
  const BinaryDist pi = binary_stationary(0.7141, 0.7141);
  CHECK(pi(0) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK_THROWS_AS(binary_stationary(1.0, 1.0), DegeneratePolicyError);
}
