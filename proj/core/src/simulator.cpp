#include "bssc/simulator.hpp"

#include <cmath>

#include "bssc/entropy.hpp"

namespace bssc {

namespace {

template <typename DrawInput>
Trace run(const ChannelKernel& kernel, std::uint64_t steps, std::uint64_t seed,
          std::uint64_t burn_in, DrawInput&& draw_input) {
  if (steps < 1) throw ValidationError("simulate needs steps >= 1");
  Trace t;
  t.seed = seed;
  t.steps = steps;
  t.burn_in = burn_in;
  t.a.reserve(steps);
  t.b.reserve(steps);
  t.s.reserve(steps);
  SplitMix64 rng = SplitMix64::stream(seed, 0);
  int b_prev = rng.bernoulli(0.5) ? 1 : 0;
  int a_prev = rng.bernoulli(0.5) ? 1 : 0;  // Markov start; symmetric stationary law
  for (std::uint64_t i = 0; i < burn_in + steps; ++i) {
    if (i == burn_in) t.b_init = b_prev;
    const int a = draw_input(rng, a_prev, b_prev);
    const int b = rng.bernoulli(kernel(0, a, b_prev)) ? 0 : 1;
    if (i >= burn_in) {
      t.a.push_back(static_cast<std::uint8_t>(a));
      t.b.push_back(static_cast<std::uint8_t>(b));
      t.s.push_back(static_cast<std::uint8_t>(a ^ b_prev));
    }
    a_prev = a;
    b_prev = b;
  }
  return t;
}

}  // namespace

Trace simulate(const ChannelKernel& kernel, const FeedbackPolicy& policy, std::uint64_t steps,
               std::uint64_t seed, std::uint64_t burn_in) {
  return run(kernel, steps, seed, burn_in, [&](SplitMix64& rng, int, int b_prev) {
    return rng.bernoulli(policy(0, b_prev)) ? 0 : 1;
  });
}

Trace simulate(const ChannelKernel& kernel, const MarkovPolicy& policy, std::uint64_t steps,
               std::uint64_t seed, std::uint64_t burn_in) {
  return run(kernel, steps, seed, burn_in, [&](SplitMix64& rng, int a_prev, int) {
    return rng.bernoulli(policy(0, a_prev)) ? 0 : 1;
  });
}

namespace {

// class index of one step: 4a + 2*b_prev + b
struct StepCounts {
  std::array<double, 8> c{};
  void add(const std::array<double, 8>& other, double w = 1.0) {
    for (int i = 0; i < 8; ++i) c[i] += w * other[i];
  }
};

double rate_from_counts(const std::array<double, 8>& c) {
  double total = 0.0;
  for (double v : c) total += v;
  if (total <= 0.0) return 0.0;
  // H(B | B_prev)
  double h_out = 0.0;
  for (int bp = 0; bp < 2; ++bp) {
    const double n0 = c[0 + 2 * bp + 0] + c[4 + 2 * bp + 0];
    const double n1 = c[0 + 2 * bp + 1] + c[4 + 2 * bp + 1];
    const double n = n0 + n1;
    if (n > 0.0) h_out += (n / total) * binary_entropy(Prob(n0 / n));
  }
  // H(B | A, B_prev)
  double h_cond = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int bp = 0; bp < 2; ++bp) {
      const double n0 = c[4 * a + 2 * bp + 0];
      const double n1 = c[4 * a + 2 * bp + 1];
      const double n = n0 + n1;
      if (n > 0.0) h_cond += (n / total) * binary_entropy(Prob(n0 / n));
    }
  return h_out - h_cond;
}

double cost_from_counts(const std::array<double, 8>& c) {
  double total = 0.0, same = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int bp = 0; bp < 2; ++bp)
      for (int b = 0; b < 2; ++b) {
        total += c[4 * a + 2 * bp + b];
        if (a == bp) same += c[4 * a + 2 * bp + b];
      }
  return total > 0.0 ? same / total : 0.0;
}

}  // namespace

EmpiricalEstimate estimate(const Trace& trace, const ChannelKernel& kernel) {
  const std::size_t n = trace.a.size();
  if (n < 1000) throw ValidationError("estimate needs a trace of at least 1000 steps");

  std::vector<std::uint8_t> cls(n);
  std::array<double, 8> counts{};
  std::uint64_t b0_count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const int bp = i == 0 ? trace.b_init : trace.b[i - 1];
    cls[i] = static_cast<std::uint8_t>(4 * trace.a[i] + 2 * bp + trace.b[i]);
    counts[cls[i]] += 1.0;
    b0_count += trace.b[i] == 0;
  }

  EmpiricalEstimate est;
  est.steps = n;
  est.rate_hat = rate_from_counts(counts);
  est.cost_hat = cost_from_counts(counts);
  est.output_p0_hat = static_cast<double>(b0_count) / n;
  for (int a = 0; a < 2; ++a)
    for (int bp = 0; bp < 2; ++bp)
      for (int b = 0; b < 2; ++b)
        est.transition_counts[a][bp][b] =
            static_cast<std::uint64_t>(counts[4 * a + 2 * bp + b]);

  double dev = 0.0;
  for (int a = 0; a < 2; ++a)
    for (int bp = 0; bp < 2; ++bp) {
      const double n0 = counts[4 * a + 2 * bp + 0];
      const double n1 = counts[4 * a + 2 * bp + 1];
      if (n0 + n1 > 0.0)
        dev = std::max(dev, std::fabs(n0 / (n0 + n1) - kernel(0, a, bp)));
    }
  est.kernel_deviation = dev;

  // Moving-block bootstrap over per-block count vectors.
  const int L = est.block_length;
  const std::size_t nblocks = n / L;
  const std::size_t nstarts = n - L + 1;
  // prefix[i][k] = count of class k among the first i steps
  std::vector<std::array<double, 8>> prefix(n + 1);
  prefix[0] = {};
  for (std::size_t i = 0; i < n; ++i) {
    prefix[i + 1] = prefix[i];
    prefix[i + 1][cls[i]] += 1.0;
  }
  auto block_counts = [&](std::size_t start) {
    std::array<double, 8> c;
    for (int k = 0; k < 8; ++k) c[k] = prefix[start + L][k] - prefix[start][k];
    return c;
  };

  SplitMix64 rng = SplitMix64::stream(trace.seed, 0xB007);
  std::vector<double> rates(est.resamples), costs(est.resamples);
  for (int r = 0; r < est.resamples; ++r) {
    std::array<double, 8> c{};
    for (std::size_t j = 0; j < nblocks; ++j) {
      const std::size_t start = static_cast<std::size_t>(rng.next() % nstarts);
      const auto bc = block_counts(start);
      for (int k = 0; k < 8; ++k) c[k] += bc[k];
    }
    rates[r] = rate_from_counts(c);
    costs[r] = cost_from_counts(c);
  }
  auto sample_sd = [](const std::vector<double>& v) {
    double mean = 0.0;
    for (double x : v) mean += x;
    mean /= v.size();
    double ss = 0.0;
    for (double x : v) ss += (x - mean) * (x - mean);
    return std::sqrt(ss / (v.size() - 1));
  };
  est.stderr_rate = sample_sd(rates);
  est.stderr_cost = sample_sd(costs);
  return est;
}

}  // namespace bssc
