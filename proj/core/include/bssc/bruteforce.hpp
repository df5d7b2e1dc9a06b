#pragma once

#include <cstdint>
#include <vector>

#include "bssc/channel.hpp"
#include "bssc/joint_table.hpp"
#include "bssc/policy.hpp"

namespace bssc {

// Conditioning available to the input law at each time i. None of the
// classes sees the initial output symbol: at i = 0 the input is
// unconditional, so the classes are nested and comparable.
enum class HistoryClass {
  prev_output,     // b_{i-1}:           1, 2, 2, 2, ... slices
  output_history,  // b_0..b_{i-1}:      1, 2, 4, 8, ... slices
  joint_history,   // a^{i-1}, b^{i-1}:  1, 4, 16, 64, ... slices
};

// Time-indexed conditional input tables. tables[i][slice] = P(a_i = 0 | slice).
// Slice packing: prev_output: slice = b_{i-1}; output_history: bit j = b_j;
// joint_history: bits 0..i-1 = a_0..a_{i-1}, bits i..2i-1 = b_0..b_{i-1}.
struct HistoryPolicy {
  int horizon = 0;
  HistoryClass conditioning = HistoryClass::prev_output;
  std::vector<std::vector<double>> tables;

  static int slice_count(HistoryClass c, int time);
  static std::uint64_t parameter_count(HistoryClass c, int horizon);
};

// Joint law of (b_init, a^n, b^n) when the kernel is driven by the
// stationary feedback policy P(a | b_prev) at every step, including i = 0
// against the initial output symbol. Layout matches
// directed_information_given_initial.
JointTable stationary_feedback_joint(const ChannelKernel& kernel, const FeedbackPolicy& policy,
                                     int horizon, const BinaryDist& initial_output);

// Same joint for a time-indexed history policy (blind to b_init at i = 0).
JointTable history_policy_joint(const ChannelKernel& kernel, const HistoryPolicy& policy,
                                const BinaryDist& initial_output);

struct BruteForceOptions {
  int horizon = 2;  // n <= 3
  HistoryClass conditioning = HistoryClass::prev_output;
  int grid_points = 11;  // <= 21; parameter values g/(grid_points-1)
  BinaryDist initial_output = BinaryDist::uniform();
  std::uint64_t evaluation_budget = 100'000'000;
  int threads = 0;  // 0 = hardware concurrency
};

struct BruteForceReport {
  double best_value = 0.0;  // (1/(n+1)) * sum_i I(A^i; B_i | B_init, B^{i-1})
  HistoryPolicy best_policy;
  double grid_resolution = 0.0;
  std::uint64_t evaluations = 0;
  double wall_time_s = 0.0;
};

// Exhaustively evaluates every policy in the class on the grid and returns
// the maximum of the normalized information sum. Deterministic regardless
// of thread count: value ties go to the lexicographically smallest table
// (earlier parameters more significant). Throws BudgetError with the
// required count when grid_points^parameter_count exceeds the budget.
BruteForceReport finite_horizon_bruteforce(const ChannelKernel& kernel,
                                           const BruteForceOptions& options);

}  // namespace bssc
