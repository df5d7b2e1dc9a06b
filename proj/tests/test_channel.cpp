#include <doctest.h>

#include <cmath>

#include "anchors.hpp"
#include "bssc/capacity.hpp"
#include "bssc/channel.hpp"
#include "bssc/rng.hpp"

using namespace bssc;

TEST_CASE("BsscParams domain") {
  CHECK_NOTHROW(BsscParams(0.92, 0.79));
  CHECK_NOTHROW(BsscParams(0.5, 0.5));
  CHECK_THROWS_AS(BsscParams(0.0, 0.5), ValidationError);
  CHECK_THROWS_AS(BsscParams(1.0, 0.5), ValidationError);
  CHECK_THROWS_AS(BsscParams(1.0 - 1e-9, 0.5), ValidationError);
  CHECK_THROWS_AS(BsscParams(1.0 - 1e-6, 0.5), ValidationError);
  CHECK_THROWS_AS(BsscParams(1.2, 0.5), ValidationError);
}

TEST_CASE("kernel layout matches the two-parameter form") {
  const ChannelKernel k = bssc_kernel(BsscParams(0.92, 0.79));
  CHECK(k(0, 0, 0) == 0.92);
  CHECK(k(1, 0, 0) == doctest::Approx(0.08).epsilon(1e-14));
  CHECK(k(0, 0, 1) == 0.79);
  CHECK(k(0, 1, 0) == doctest::Approx(0.21).epsilon(1e-14));
  CHECK(k(0, 1, 1) == doctest::Approx(0.08).epsilon(1e-14));
  // rows over b sum to 1 exactly as constructed
  for (int a = 0; a < 2; ++a)
    for (int bp = 0; bp < 2; ++bp) CHECK(k(0, a, bp) + k(1, a, bp) == 1.0);

  const ChannelKernel noise = bssc_kernel(BsscParams(0.5, 0.5));
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 2; ++a)
      for (int bp = 0; bp < 2; ++bp) CHECK(noise(b, a, bp) == 0.5);
}

TEST_CASE("state decomposition and exact reconstruction") {
  const ChannelKernel k = bssc_kernel(BsscParams(0.92, 0.79));
  const auto [arm0, arm1] = state_decompose(k);
  CHECK(arm0(0, 0) == 0.92);
  CHECK(arm0(0, 1) == doctest::Approx(0.08).epsilon(1e-14));
  CHECK(arm0(1, 0) == doctest::Approx(0.08).epsilon(1e-14));
  CHECK(arm0(1, 1) == 0.92);
  CHECK(arm1(0, 0) == 0.79);
  CHECK(arm1(1, 1) == 0.79);

  const ChannelKernel back = compose_from_arms(arm0, arm1);
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 2; ++a)
      for (int bp = 0; bp < 2; ++bp) CHECK(back(b, a, bp) == k(b, a, bp));

  const auto [u0, u1] = state_decompose(bssc_kernel(BsscParams(0.5, 0.5)));
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      CHECK(u0(r, c) == 0.5);
      CHECK(u1(r, c) == 0.5);
    }
}

TEST_CASE("state decomposition rejects asymmetric kernels") {
  // P(0|0,0) = 0.9 but P(1|1,1) = 0.8 breaks the state-0 symmetry
  std::array<std::array<std::array<double, 2>, 2>, 2> p{};
  p[0][0][0] = 0.9;
  p[0][0][1] = 0.7;
  p[0][1][0] = 0.3;
  p[0][1][1] = 0.2;
  for (int a = 0; a < 2; ++a)
    for (int bp = 0; bp < 2; ++bp) p[1][a][bp] = 1.0 - p[0][a][bp];
  CHECK_THROWS_AS(state_decompose(ChannelKernel(p)), StructureError);
}

TEST_CASE("expected cost") {
  const BinaryDist uniform = BinaryDist::uniform();
  CHECK(expected_cost(FeedbackPolicy(Matrix2::symmetric(Prob(0.71))), uniform) ==
        doctest::Approx(0.71).epsilon(1e-14));
  CHECK(expected_cost(FeedbackPolicy(Matrix2(1, 0, 0, 1)), uniform) == 1.0);
  CHECK(expected_cost(FeedbackPolicy(Matrix2(1, 0, 0, 1)), BinaryDist(Prob(0.2))) == 1.0);
  CHECK(expected_cost(FeedbackPolicy(Matrix2(0, 1, 1, 0)), uniform) == 0.0);

  // linear in the policy entries for a fixed marginal
  SplitMix64 rng(5);
  for (int rep = 0; rep < 100; ++rep) {
    const double p0 = rng.uniform(), p1 = rng.uniform(), q0 = rng.uniform(),
                 q1 = rng.uniform(), t = rng.uniform();
    const BinaryDist marg(Prob(rng.uniform()));
    const double mix =
        expected_cost(FeedbackPolicy(Prob(t * p0 + (1 - t) * q0), Prob(t * p1 + (1 - t) * q1)),
                      marg);
    const double lin = t * expected_cost(FeedbackPolicy(Prob(p0), Prob(p1)), marg) +
                       (1 - t) * expected_cost(FeedbackPolicy(Prob(q0), Prob(q1)), marg);
    CHECK(mix == doctest::Approx(lin).epsilon(1e-12));
  }
}

TEST_CASE("canonicalize fixed points and flags") {
  const BsscParams same = canonicalize(0.92, 0.79);
  CHECK(same.alpha() == 0.92);
  CHECK(same.beta() == 0.79);
  CHECK(!same.flags().any());
  CHECK(same.canonical());
  CHECK(same.aligned());

  const BsscParams reversed = canonicalize(0.79, 0.92);
  CHECK(reversed.alpha() == 0.92);
  CHECK(reversed.beta() == 0.79);
  CHECK(reversed.flags().cost_reversed);
  CHECK(!reversed.flags().input_flip_state0);

  // both arms crossed: flips always come in pairs
  const BsscParams flipped = canonicalize(0.08, 0.21);
  CHECK(flipped.alpha() == 0.92);
  CHECK(flipped.beta() == 0.79);
  CHECK(flipped.flags().input_flip_state0);
  CHECK(flipped.flags().input_flip_state1);
  CHECK(!flipped.flags().cost_reversed);

  // anti-aligned: no orbit member has beta >= 0.5
  const BsscParams anti = canonicalize(0.08, 0.79);
  CHECK(anti.alpha() == 0.92);
  CHECK(anti.beta() == doctest::Approx(0.21).epsilon(1e-14));
  CHECK(anti.flags().input_flip_state0);
  CHECK(anti.flags().input_flip_state1);
  CHECK(!anti.aligned());
  CHECK(anti.canonical());
}

TEST_CASE("canonicalize is idempotent") {
  SplitMix64 rng(11);
  for (int rep = 0; rep < 500; ++rep) {
    const double a = 0.01 + 0.98 * rng.uniform();
    const double b = 0.01 + 0.98 * rng.uniform();
    const BsscParams once = canonicalize(a, b);
    const BsscParams twice = canonicalize(once.alpha(), once.beta());
    CHECK(twice.alpha() == once.alpha());
    CHECK(twice.beta() == once.beta());
    CHECK(!twice.flags().any());
    CHECK(once.canonical());
  }
}

TEST_CASE("capacity is invariant along the canonicalization orbit") {
  SplitMix64 rng(13);
  for (int rep = 0; rep < 300; ++rep) {
    const double a = 0.02 + 0.96 * rng.uniform();
    const double b = 0.02 + 0.96 * rng.uniform();
    const BsscParams raw(a, b);
    if (raw.sum_degenerate()) continue;
    const BsscParams canon = canonicalize(a, b);
    CHECK(capacity_fb(raw).capacity ==
          doctest::Approx(capacity_fb(canon).capacity).epsilon(1e-11));
    // cost reversal re-maps the cost level
    const double k = rng.uniform();
    const double k_canon = canon.flags().cost_reversed ? 1.0 - k : k;
    CHECK(capacity_fb_cost(raw, Prob(k)).capacity ==
          doctest::Approx(capacity_fb_cost(canon, Prob(k_canon)).capacity).epsilon(1e-10));
  }
}
