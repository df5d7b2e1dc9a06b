#include <doctest.h>

#include <cmath>

#include "anchors.hpp"
#include "bssc/bruteforce.hpp"
#include "bssc/capacity.hpp"
#include "bssc/joint_table.hpp"

using namespace bssc;

namespace {
const BsscParams kReference(0.92, 0.79);

// direct one-shot check: max over the input grid of I(A_0; B_0 | B_init)
double one_shot_best(const ChannelKernel& kernel, int grid_points) {
  double best = -1.0;
  for (int g = 0; g < grid_points; ++g) {
    const double q = static_cast<double>(g) / (grid_points - 1);
    double value = 0.0;
    for (int binit = 0; binit < 2; ++binit) {
      const double pb0 = q * kernel(0, 0, binit) + (1.0 - q) * kernel(0, 1, binit);
      double h_cond = q * binary_entropy(Prob(kernel(0, 0, binit))) +
                      (1.0 - q) * binary_entropy(Prob(kernel(0, 1, binit)));
      value += 0.5 * (binary_entropy(Prob(pb0)) - h_cond);
    }
    best = std::max(best, value);
  }
  return best;
}

}  // namespace

TEST_CASE("parameter counts per conditioning class") {
  CHECK(HistoryPolicy::parameter_count(HistoryClass::prev_output, 2) == 5);
  CHECK(HistoryPolicy::parameter_count(HistoryClass::output_history, 2) == 7);
  CHECK(HistoryPolicy::parameter_count(HistoryClass::joint_history, 2) == 21);
  CHECK(HistoryPolicy::parameter_count(HistoryClass::prev_output, 0) == 1);
}

TEST_CASE("horizon 0 reduces to the one-shot problem") {
  const ChannelKernel kernel = bssc_kernel(kReference);
  BruteForceOptions opt;
  opt.horizon = 0;
  opt.grid_points = 21;
  const BruteForceReport r = finite_horizon_bruteforce(kernel, opt);
  CHECK(r.best_value == doctest::Approx(one_shot_best(kernel, 21)).epsilon(1e-13));
  CHECK(r.evaluations == 21);
}

TEST_CASE("prev-output and output-history coincide at horizon 1") {
  const ChannelKernel kernel = bssc_kernel(kReference);
  BruteForceOptions opt;
  opt.horizon = 1;
  opt.grid_points = 9;
  opt.conditioning = HistoryClass::prev_output;
  const BruteForceReport a = finite_horizon_bruteforce(kernel, opt);
  opt.conditioning = HistoryClass::output_history;
  const BruteForceReport b = finite_horizon_bruteforce(kernel, opt);
  CHECK(a.best_value == b.best_value);
  CHECK(a.evaluations == b.evaluations);
}

TEST_CASE("wider conditioning classes never do worse, and the gap stays small") {
  const ChannelKernel kernel = bssc_kernel(kReference);
  BruteForceOptions opt;
  opt.horizon = 1;
  opt.grid_points = 11;
  opt.conditioning = HistoryClass::prev_output;
  const BruteForceReport prev = finite_horizon_bruteforce(kernel, opt);
  opt.conditioning = HistoryClass::joint_history;
  const BruteForceReport joint = finite_horizon_bruteforce(kernel, opt);
  CHECK(joint.best_value >= prev.best_value - 1e-12);
  CHECK(joint.best_value - prev.best_value <= 0.01);
  CHECK(std::fabs(joint.best_value - anchors::C_FB) <= 0.02);
  CHECK(std::fabs(prev.best_value - anchors::C_FB) <= 0.02);
}

TEST_CASE("deterministic across thread counts") {
  const ChannelKernel kernel = bssc_kernel(kReference);
  BruteForceOptions opt;
  opt.horizon = 1;
  opt.grid_points = 7;
  opt.conditioning = HistoryClass::joint_history;
  opt.threads = 1;
  const BruteForceReport one = finite_horizon_bruteforce(kernel, opt);
  opt.threads = 2;
  const BruteForceReport two = finite_horizon_bruteforce(kernel, opt);
  opt.threads = 3;
  const BruteForceReport three = finite_horizon_bruteforce(kernel, opt);
  CHECK(one.best_value == two.best_value);
  CHECK(one.best_value == three.best_value);
  CHECK(one.best_policy.tables == two.best_policy.tables);
  CHECK(one.best_policy.tables == three.best_policy.tables);
}

TEST_CASE("budget errors carry the required count") {
  const ChannelKernel kernel = bssc_kernel(kReference);
  BruteForceOptions opt;
  opt.horizon = 2;
  opt.grid_points = 11;
  opt.conditioning = HistoryClass::joint_history;  // 11^21 policies
  try {
    finite_horizon_bruteforce(kernel, opt);
    FAIL("expected BudgetError");
  } catch (const BudgetError& e) {
    CHECK(e.required_evaluations > e.budget);
    CHECK(e.budget == 100000000ull);
  }
  opt.conditioning = HistoryClass::output_history;
  opt.horizon = 3;  // 11^15 policies
  CHECK_THROWS_AS(finite_horizon_bruteforce(kernel, opt), BudgetError);
  CHECK_THROWS_AS(
      [&] {
        BruteForceOptions bad;
        bad.horizon = 4;
        return finite_horizon_bruteforce(kernel, bad);
      }(),
      ValidationError);
}

TEST_CASE("history joints are valid distributions") {
  const ChannelKernel kernel = bssc_kernel(kReference);
  HistoryPolicy p;
  p.horizon = 2;
  p.conditioning = HistoryClass::output_history;
  p.tables = {{0.3}, {0.9, 0.1}, {0.25, 0.5, 0.75, 1.0}};
  const JointTable t = history_policy_joint(kernel, p, BinaryDist::uniform());
  CHECK_NOTHROW(t.validate(1e-12));
  CHECK(directed_information_given_initial(t, 2) >= 0.0);

  p.tables = {{0.3}, {0.9, 0.1}};
  CHECK_THROWS_AS(history_policy_joint(kernel, p, BinaryDist::uniform()), ValidationError);
}

TEST_CASE("regression anchors from the first exhaustive computation") {
  const ChannelKernel kernel = bssc_kernel(kReference);
  BruteForceOptions opt;
  opt.grid_points = 11;

  opt.horizon = 0;
  opt.conditioning = HistoryClass::prev_output;
  CHECK(finite_horizon_bruteforce(kernel, opt).best_value ==
        doctest::Approx(anchors::BF_N0_PREV).epsilon(1e-12));
  opt.horizon = 1;
  CHECK(finite_horizon_bruteforce(kernel, opt).best_value ==
        doctest::Approx(anchors::BF_N1_PREV).epsilon(1e-12));
  opt.horizon = 2;
  CHECK(finite_horizon_bruteforce(kernel, opt).best_value ==
        doctest::Approx(anchors::BF_N2_PREV).epsilon(1e-12));
  opt.horizon = 1;
  opt.conditioning = HistoryClass::joint_history;
  CHECK(finite_horizon_bruteforce(kernel, opt).best_value ==
        doctest::Approx(anchors::BF_N1_JOINT).epsilon(1e-12));
}

TEST_CASE("cost spec table generalizes the state-occupancy cost") {
  const BinaryDist marg(Prob(0.3));
  const FeedbackPolicy policy(Prob(0.8), Prob(0.4));
  CHECK(expected_cost(policy, marg, CostSpec::state_occupancy()) ==
        doctest::Approx(expected_cost(policy, marg)).epsilon(1e-15));
  const CostSpec skew({{{0.25, 2.0}, {1.0, 0.0}}});
  const double manual = 0.3 * (0.8 * 0.25 + 0.2 * 1.0) + 0.7 * (0.4 * 2.0 + 0.6 * 0.0);
  CHECK(expected_cost(policy, marg, skew) == doctest::Approx(manual).epsilon(1e-15));
  CHECK_THROWS_AS(CostSpec({{{-0.1, 0.0}, {0.0, 1.0}}}), ValidationError);
}

TEST_CASE("stationary feedback policy is the brute-force upper envelope") {
  // the class best can only fall below the stationary feedback value by
  // the blind first step, never above the capacity
  const ChannelKernel kernel = bssc_kernel(kReference);
  BruteForceOptions opt;
  opt.horizon = 1;
  opt.grid_points = 11;
  const BruteForceReport r = finite_horizon_bruteforce(kernel, opt);
  CHECK(r.best_value <= anchors::C_FB + 1e-9);
}
