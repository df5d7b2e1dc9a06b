#include "bssc/channel.hpp"

#include <cmath>
#include <string>

namespace bssc {

namespace {

// Entropies and the time-sharing formula are ill-conditioned against the
// boundary; anything within 1e-6 of {0,1} is rejected outright.
constexpr double kBoundaryMargin = 1e-6;

void check_open_unit(double v, const char* name) {
  if (!(v > kBoundaryMargin && v < 1.0 - kBoundaryMargin))
    throw ValidationError(std::string(name) + " must lie inside (" +
                          std::to_string(kBoundaryMargin) + ", 1 - " +
                          std::to_string(kBoundaryMargin) + "), got " + std::to_string(v));
}

}  // namespace

BsscParams::BsscParams(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  check_open_unit(alpha, "alpha");
  check_open_unit(beta, "beta");
}

bool BsscParams::canonical() const { return alpha_ >= beta_ && alpha_ + beta_ >= 1.0; }

bool BsscParams::aligned() const { return (alpha_ - 0.5) * (beta_ - 0.5) >= 0.0; }

bool BsscParams::sum_degenerate() const {
  return std::fabs(alpha_ + beta_ - 1.0) <= kSumDegenerateTol;
}

ChannelKernel::ChannelKernel(const std::array<std::array<std::array<double, 2>, 2>, 2>& p)
    : p_(p) {
  for (int a = 0; a < 2; ++a)
    for (int bp = 0; bp < 2; ++bp) {
      (void)Prob(p_[0][a][bp]);
      (void)Prob(p_[1][a][bp]);
      if (std::fabs(p_[0][a][bp] + p_[1][a][bp] - 1.0) > kProbSlack)
        throw ValidationError("kernel column (a=" + std::to_string(a) +
                              ", b_prev=" + std::to_string(bp) + ") does not sum to 1");
    }
}

CostSpec::CostSpec(const std::array<std::array<double, 2>, 2>& c) : c_(c) {
  for (int a = 0; a < 2; ++a)
    for (int bp = 0; bp < 2; ++bp)
      if (!(c_[a][bp] >= 0.0) || !std::isfinite(c_[a][bp]))
        throw ValidationError("cost entries must be finite and nonnegative");
}

CostSpec CostSpec::state_occupancy() { return CostSpec({{{1.0, 0.0}, {0.0, 1.0}}}); }

ChannelKernel bssc_kernel(const BsscParams& params) {
  const double a = params.alpha();
  const double b = params.beta();
  std::array<std::array<std::array<double, 2>, 2>, 2> p{};
  p[0][0][0] = a;
  p[0][0][1] = b;
  p[0][1][0] = 1.0 - b;
  p[0][1][1] = 1.0 - a;
  for (int ai = 0; ai < 2; ++ai)
    for (int bp = 0; bp < 2; ++bp) p[1][ai][bp] = 1.0 - p[0][ai][bp];
  return ChannelKernel(p);
}

std::pair<Matrix2, Matrix2> state_decompose(const ChannelKernel& k) {
  const double tol = kProbSlack;
  const double alpha = k(0, 0, 0);
  const double beta = k(0, 0, 1);
  if (std::fabs(k(1, 1, 1) - alpha) > tol)
    throw StructureError("state-0 arm asymmetric: P(0|0,0) != P(1|1,1)");
  if (std::fabs(k(1, 1, 0) - beta) > tol)
    throw StructureError("state-1 arm asymmetric: P(0|0,1) != P(1|1,0)");
  if (std::fabs(k(0, 1, 0) - (1.0 - beta)) > tol)
    throw StructureError("state-1 arm asymmetric: P(0|1,0) != 1 - P(0|0,1)");
  if (std::fabs(k(0, 1, 1) - (1.0 - alpha)) > tol)
    throw StructureError("state-0 arm asymmetric: P(0|1,1) != 1 - P(0|0,0)");
  // Arms map a -> b; P(b = a) is alpha on state 0, beta on state 1.
  Matrix2 arm0(k(0, 0, 0), k(1, 0, 0), k(0, 1, 1), k(1, 1, 1));
  Matrix2 arm1(k(0, 0, 1), k(1, 0, 1), k(0, 1, 0), k(1, 1, 0));
  return {arm0, arm1};
}

ChannelKernel compose_from_arms(const Matrix2& arm0, const Matrix2& arm1) {
  std::array<std::array<std::array<double, 2>, 2>, 2> p{};
  for (int b = 0; b < 2; ++b)
    for (int a = 0; a < 2; ++a)
      for (int bp = 0; bp < 2; ++bp) {
        const int s = a ^ bp;
        p[b][a][bp] = (s == 0 ? arm0 : arm1)(a, b);
      }
  return ChannelKernel(p);
}

double expected_cost(const FeedbackPolicy& policy, const BinaryDist& b_prev_marginal) {
  return b_prev_marginal(0) * policy(0, 0) + b_prev_marginal(1) * policy(1, 1);
}

double expected_cost(const FeedbackPolicy& policy, const BinaryDist& b_prev_marginal,
                     const CostSpec& cost) {
  double total = 0.0;
  for (int bp = 0; bp < 2; ++bp)
    for (int a = 0; a < 2; ++a) total += b_prev_marginal(bp) * policy(a, bp) * cost(a, bp);
  return total;
}

BsscParams canonicalize(double alpha_raw, double beta_raw) {
  check_open_unit(alpha_raw, "alpha");
  check_open_unit(beta_raw, "beta");
  struct Candidate {
    double a, b;
    CanonicalFlags f;
  };
  const Candidate orbit[4] = {
      {alpha_raw, beta_raw, {false, false, false}},
      {beta_raw, alpha_raw, {false, false, true}},
      {1.0 - alpha_raw, 1.0 - beta_raw, {true, true, false}},
      {1.0 - beta_raw, 1.0 - alpha_raw, {true, true, true}},
  };
  for (const auto& c : orbit) {
    if (c.a >= c.b && c.a + c.b >= 1.0) {
      BsscParams out(c.a, c.b);
      out.flags_ = c.f;
      return out;
    }
  }
  // Unreachable: one of the four members always satisfies both predicates.
  throw ValidationError("canonicalize: no canonical orbit member");
}

}  // namespace bssc
