#include <benchmark/benchmark.h>

#include "bssc/bruteforce.hpp"
#include "bssc/capacity.hpp"
#include "bssc/oracles.hpp"
#include "bssc/simulator.hpp"

namespace {

const bssc::BsscParams kParams(0.92, 0.79);

void BM_ClosedFormCapacity(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bssc::capacity_fb(kParams).capacity);
  }
}
BENCHMARK(BM_ClosedFormCapacity);

void BM_SingleLetterRate(benchmark::State& state) {
  const bssc::ChannelKernel kernel = bssc::bssc_kernel(kParams);
  const bssc::FeedbackPolicy policy(bssc::Matrix2::symmetric(bssc::Prob(0.71)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bssc::single_letter_rate(kernel, policy).rate);
  }
}
BENCHMARK(BM_SingleLetterRate);

void BM_GridCapacity(benchmark::State& state) {
  const bssc::ChannelKernel kernel = bssc::bssc_kernel(kParams);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        bssc::grid_capacity(kernel, std::nullopt, 0.01, state.range(0)).best_value);
  }
}
BENCHMARK(BM_GridCapacity)->Arg(0)->Arg(3);

void BM_DirectedInfoHorizon2(benchmark::State& state) {
  const bssc::ChannelKernel kernel = bssc::bssc_kernel(kParams);
  const bssc::FeedbackPolicy policy(bssc::Matrix2::symmetric(bssc::Prob(0.71)));
  const bssc::JointTable joint =
      bssc::stationary_feedback_joint(kernel, policy, 2, bssc::BinaryDist::uniform());
  for (auto _ : state) {
    benchmark::DoNotOptimize(bssc::directed_information_given_initial(joint, 2));
  }
}
BENCHMARK(BM_DirectedInfoHorizon2);

void BM_BruteForceHorizon1(benchmark::State& state) {
  const bssc::ChannelKernel kernel = bssc::bssc_kernel(kParams);
  bssc::BruteForceOptions opt;
  opt.horizon = 1;
  opt.grid_points = 11;
  opt.conditioning = bssc::HistoryClass::prev_output;
  for (auto _ : state) {
    benchmark::DoNotOptimize(bssc::finite_horizon_bruteforce(kernel, opt).best_value);
  }
}
BENCHMARK(BM_BruteForceHorizon1);

void BM_Simulate(benchmark::State& state) {
  const bssc::ChannelKernel kernel = bssc::bssc_kernel(kParams);
  const bssc::FeedbackPolicy policy(bssc::Matrix2::symmetric(bssc::Prob(0.71)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        bssc::simulate(kernel, policy, static_cast<std::uint64_t>(state.range(0)), 7).b);
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Simulate)->Arg(100000);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
