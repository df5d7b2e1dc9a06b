#pragma once

#include <array>
#include <utility>

#include "bssc/entropy.hpp"
#include "bssc/policy.hpp"

namespace bssc {

// |alpha + beta - 1| at or below this makes the output independent of the
// input: zero capacity for every cost level, and the time-sharing optimum
// is undefined.
inline constexpr double kSumDegenerateTol = 1e-9;

// Which capacity-preserving relabelings canonicalize() applied. Arm flips
// only ever occur in pairs (a single-arm relabeling changes the channel's
// information structure and is not capacity-preserving); cost reversal
// re-maps the cost level kappa <-> 1 - kappa.
struct CanonicalFlags {
  bool input_flip_state0 = false;
  bool input_flip_state1 = false;
  bool cost_reversed = false;
  bool any() const { return input_flip_state0 || input_flip_state1 || cost_reversed; }
};

// Channel parameter pair. alpha, beta in the open interval (0,1): boundary
// values make the time-sharing formula and the relabeling logic degenerate.
class BsscParams {
 public:
  BsscParams(double alpha, double beta);

  double alpha() const { return alpha_; }
  double beta() const { return beta_; }
  const CanonicalFlags& flags() const { return flags_; }

  // alpha >= beta and alpha + beta >= 1 (fixed point of canonicalize()).
  bool canonical() const;
  // True when the relabeling orbit contains a member with alpha >= beta >= 0.5.
  // Anti-aligned channels ((alpha-0.5)(beta-0.5) < 0) have no such member.
  bool aligned() const;
  // Zero-capacity family alpha + beta = 1 (within kSumDegenerateTol).
  bool sum_degenerate() const;

 private:
  double alpha_;
  double beta_;
  CanonicalFlags flags_;
  friend BsscParams canonicalize(double, double);
};

// P(b | a, b_prev); general unit-memory kernel over binary alphabets.
class ChannelKernel {
 public:
  // p[b][a][b_prev]
  explicit ChannelKernel(const std::array<std::array<std::array<double, 2>, 2>, 2>& p);
  double operator()(int b, int a, int b_prev) const { return p_[b][a][b_prev]; }

 private:
  std::array<std::array<std::array<double, 2>, 2>, 2> p_;
};

// Per-letter transmission cost c(a, b_prev) >= 0.
class CostSpec {
 public:
  explicit CostSpec(const std::array<std::array<double, 2>, 2>& c);
  // The binary pay-off charging 1 whenever a = b_prev (state 0 in use).
  static CostSpec state_occupancy();
  double operator()(int a, int b_prev) const { return c_[a][b_prev]; }

 private:
  std::array<std::array<double, 2>, 2> c_;
};

// The two-parameter state-symmetric kernel:
//   P(0|0,0) = alpha, P(0|0,1) = beta, P(0|1,0) = 1-beta, P(0|1,1) = 1-alpha.
ChannelKernel bssc_kernel(const BsscParams& params);

// Splits a state-symmetric kernel into its two binary symmetric arms,
// indexed by the state s = a XOR b_prev: arm 0 has crossover 1-alpha,
// arm 1 has crossover 1-beta. Rows are the input a, columns the output b.
// Throws StructureError naming the violated symmetry otherwise.
std::pair<Matrix2, Matrix2> state_decompose(const ChannelKernel& kernel);

// Rebuilds the kernel from the two arms; exact inverse of state_decompose.
ChannelKernel compose_from_arms(const Matrix2& arm0, const Matrix2& arm1);

// E{ 1[a = b_prev] } = P(state 0) under the given law of b_prev.
double expected_cost(const FeedbackPolicy& policy, const BinaryDist& b_prev_marginal);

// General per-letter cost table; the closed forms only ever wire in
// state_occupancy(), but the average is defined for any table.
double expected_cost(const FeedbackPolicy& policy, const BinaryDist& b_prev_marginal,
                     const CostSpec& cost);

// Canonical representative of the capacity-equivalence orbit
//   { (a,b), (b,a), (1-a,1-b), (1-b,1-a) }
// with alpha >= beta and alpha + beta >= 1, preferring the identity. The
// flags record the applied relabelings; a recorded cost reversal means the
// caller must read results at 1 - kappa.
BsscParams canonicalize(double alpha_raw, double beta_raw);

}  // namespace bssc
