#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bssc/channel.hpp"
#include "bssc/policy.hpp"
#include "bssc/rng.hpp"

namespace bssc {

// One realized run of the (input, channel) system after burn-in.
// Invariant: s[i] = a[i] XOR b[i-1], with b[-1] = b_init.
struct Trace {
  std::vector<std::uint8_t> a, b, s;
  int b_init = 0;  // output symbol preceding the recorded window
  std::uint64_t seed = 0;
  std::uint64_t steps = 0;
  std::uint64_t burn_in = 0;
  std::string generator = kGeneratorName;
};

// Samples b_{-1} uniformly, then alternates input draws (conditioned on the
// previous output for a feedback policy, on the previous input for a Markov
// policy) with kernel draws. Deterministic given the seed.
Trace simulate(const ChannelKernel& kernel, const FeedbackPolicy& policy,
               std::uint64_t steps, std::uint64_t seed, std::uint64_t burn_in = 1000);
Trace simulate(const ChannelKernel& kernel, const MarkovPolicy& policy, std::uint64_t steps,
               std::uint64_t seed, std::uint64_t burn_in = 1000);

struct EmpiricalEstimate {
  double rate_hat = 0.0;  // plug-in H(B|B_prev) - H(B|A,B_prev), bits/use
  double cost_hat = 0.0;  // empirical frequency of a_i = b_{i-1}
  double stderr_rate = 0.0;
  double stderr_cost = 0.0;
  std::array<std::array<std::array<std::uint64_t, 2>, 2>, 2> transition_counts{};  // [a][bp][b]
  double output_p0_hat = 0.0;
  double kernel_deviation = 0.0;  // max |empirical P(b|a,bp) - kernel entry|
  std::uint64_t steps = 0;
  int block_length = 100;
  int resamples = 200;
};

// Plug-in rate/cost with moving-block-bootstrap standard errors (block
// length 100, 200 resamples; the chain is dependent, so i.i.d. errors would
// be optimistic). Bootstrap draws come from a stream derived from the trace
// seed, so the whole estimate is reproducible. Requires >= 1000 steps.
EmpiricalEstimate estimate(const Trace& trace, const ChannelKernel& kernel);

}  // namespace bssc
