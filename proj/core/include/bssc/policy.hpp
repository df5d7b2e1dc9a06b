#pragma once

#include "bssc/entropy.hpp"

namespace bssc {

// Single-letter input law with feedback, P(a | b_prev). Row = b_prev.
class FeedbackPolicy {
 public:
  explicit FeedbackPolicy(Matrix2 m) : m_(m) {}
  FeedbackPolicy(Prob a0_given_bprev0, Prob a0_given_bprev1)
      : m_(a0_given_bprev0, 1.0 - a0_given_bprev0.value(),
           a0_given_bprev1, 1.0 - a0_given_bprev1.value()) {}
  const Matrix2& matrix() const { return m_; }
  double operator()(int a, int b_prev) const { return m_(b_prev, a); }

 private:
  Matrix2 m_;
};

// First-order Markov input law without feedback, P(a | a_prev). Row = a_prev.
class MarkovPolicy {
 public:
  explicit MarkovPolicy(Matrix2 m) : m_(m) {}
  const Matrix2& matrix() const { return m_; }
  double operator()(int a, int a_prev) const { return m_(a_prev, a); }

 private:
  Matrix2 m_;
};

}  // namespace bssc
