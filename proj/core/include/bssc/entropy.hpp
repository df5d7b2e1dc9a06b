#pragma once

#include <array>
#include <cmath>

#include "bssc/errors.hpp"

namespace bssc {

// Construction slack for probabilities: optimizer iterates may drift a hair
// outside [0,1]; anything inside the band is clamped, anything outside throws.
inline constexpr double kProbSlack = 1e-12;

// A scalar probability, validated on construction.
class Prob {
 public:
  constexpr Prob() = default;
  Prob(double v) {  // NOLINT: implicit by design, Prob is a checked double
    if (v < -kProbSlack || v > 1.0 + kProbSlack)
      throw ValidationError("probability out of range: " + std::to_string(v));
    v_ = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
  }
  constexpr operator double() const { return v_; }
  constexpr double value() const { return v_; }

 private:
  double v_ = 0.0;
};

// Distribution on {0,1}; p1 is implied.
class BinaryDist {
 public:
  explicit BinaryDist(Prob p0) : p0_(p0) {}
  static BinaryDist uniform() { return BinaryDist(Prob(0.5)); }
  double p0() const { return p0_; }
  double p1() const { return 1.0 - p0_.value(); }
  double operator()(int symbol) const { return symbol == 0 ? p0() : p1(); }

 private:
  Prob p0_;
};

// Row-stochastic 2x2 table. Row = conditioning symbol, column = outcome.
class Matrix2 {
 public:
  Matrix2(double a00, double a01, double a10, double a11)
      : m_{{{a00, a01}, {a10, a11}}} {
    for (int r = 0; r < 2; ++r) {
      (void)Prob(m_[r][0]);
      (void)Prob(m_[r][1]);
      if (std::fabs(m_[r][0] + m_[r][1] - 1.0) > kProbSlack)
        throw ValidationError("matrix row " + std::to_string(r) + " does not sum to 1");
    }
  }
  // [[d, 1-d], [1-d, d]]
  static Matrix2 symmetric(Prob d) {
    const double v = d.value();
    return Matrix2(v, 1.0 - v, 1.0 - v, v);
  }
  double operator()(int row, int col) const { return m_[row][col]; }
  BinaryDist row(int r) const { return BinaryDist(Prob(m_[r][0])); }
  bool doubly_stochastic(double tol = kProbSlack) const {
    return std::fabs(m_[0][0] + m_[1][0] - 1.0) <= tol &&
           std::fabs(m_[0][1] + m_[1][1] - 1.0) <= tol;
  }

 private:
  std::array<std::array<double, 2>, 2> m_;
};

inline double neg_x_log2_x(double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; }

// H(p) in bits, with the 0·log0 = 0 convention handled by an explicit branch.
// Evaluating the two terms from p and 1-p as written makes H bit-exactly
// symmetric: fl(1 - fl(1 - p)) == p for every double p in [0,1].
inline double binary_entropy(Prob p) {
  return neg_x_log2_x(p.value()) + neg_x_log2_x(1.0 - p.value());
}

// H(column | row) = sum_x marginal(x) * H(cond row x), in bits.
inline double conditional_entropy_given(const Matrix2& cond, const BinaryDist& marginal) {
  return marginal(0) * binary_entropy(Prob(cond(0, 0))) +
         marginal(1) * binary_entropy(Prob(cond(1, 0)));
}

}  // namespace bssc
