#include "bssc/joint_table.hpp"

#include <bit>
#include <cmath>
#include <string>
#include <utility>

#include "bssc/entropy.hpp"

namespace bssc {

JointTable::JointTable(int num_vars) : num_vars_(num_vars) {
  if (num_vars < 1 || num_vars > 20)
    throw ValidationError("joint table supports 1..20 binary variables");
  masses_.assign(std::size_t{1} << num_vars, 0.0);
}

JointTable JointTable::from_masses(int num_vars, std::vector<double> masses) {
  JointTable t(num_vars);
  if (masses.size() != t.size())
    throw ValidationError("mass vector has wrong length");
  t.masses_ = std::move(masses);
  t.validate();
  return t;
}

void JointTable::validate(double tol) const {
  double total = 0.0;
  for (double m : masses_) {
    if (m < 0.0) throw ValidationError("negative mass in joint table");
    total += m;
  }
  if (std::fabs(total - 1.0) > tol)
    throw ValidationError("joint table mass is " + std::to_string(total) + ", not 1");
}

namespace {

// packed index -> index over the variables selected by mask
inline std::uint32_t compress_bits(std::uint32_t packed, std::uint32_t mask) {
  std::uint32_t out = 0;
  int pos = 0;
  while (mask != 0) {
    const std::uint32_t low = mask & (~mask + 1);
    if (packed & low) out |= (1u << pos);
    ++pos;
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

double JointTable::marginal_entropy(std::uint32_t keep_mask) const {
  const int k = std::popcount(keep_mask);
  std::vector<double> marg(std::size_t{1} << k, 0.0);
  for (std::size_t idx = 0; idx < masses_.size(); ++idx)
    marg[compress_bits(static_cast<std::uint32_t>(idx), keep_mask)] += masses_[idx];
  double h = 0.0;
  for (double p : marg) h += neg_x_log2_x(p);
  return h;
}

JointTable JointTable::marginalized(std::uint32_t keep_mask) const {
  const int k = std::popcount(keep_mask);
  JointTable out(k);
  for (std::size_t idx = 0; idx < masses_.size(); ++idx)
    out.masses_[compress_bits(static_cast<std::uint32_t>(idx), keep_mask)] += masses_[idx];
  return out;
}

DirectedInfoEval::DirectedInfoEval(int horizon, bool given_initial) {
  if (horizon < 0 || horizon > 8)
    throw ValidationError("directed information horizon must be in 0..8");
  const int n = horizon;
  const int base = given_initial ? 1 : 0;
  num_vars_ = base + 2 * (n + 1);
  const std::uint32_t init_mask = given_initial ? 1u : 0u;
  auto a_mask = [&](int upto) {  // a_0..a_upto
    std::uint32_t m = 0;
    for (int i = 0; i <= upto; ++i) m |= (1u << (base + i));
    return m;
  };
  auto b_mask = [&](int upto) {  // b_0..b_upto; upto = -1 gives none
    std::uint32_t m = 0;
    for (int i = 0; i <= upto; ++i) m |= (1u << (base + n + 1 + i));
    return m;
  };
  // I(X;Y|Z) = H(X,Z) + H(Y,Z) - H(X,Y,Z) - H(Z) with X = A^i, Y = B_i,
  // Z = (B^{i-1}) or (B_init, B^{i-1}).
  for (int i = 0; i <= n; ++i) {
    const std::uint32_t ai = a_mask(i);
    const std::uint32_t bprev = b_mask(i - 1) | init_mask;
    const std::uint32_t bi = b_mask(i) | init_mask;
    add_mask(ai | bprev, +1.0);
    add_mask(bi, +1.0);
    add_mask(ai | bi, -1.0);
    add_mask(bprev, -1.0);
  }
  std::size_t max_out = 0;
  for (const auto& m : marginals_) max_out = std::max(max_out, std::size_t(m.out_size));
  scratch_.resize(max_out);
}

void DirectedInfoEval::add_mask(std::uint32_t mask, double sign) {
  if (mask == 0) return;  // H(empty) = 0
  for (auto& m : marginals_) {
    if (m.mask == mask) {
      m.sign += sign;
      return;
    }
  }
  Marginal m;
  m.mask = mask;
  m.sign = sign;
  m.out_size = 1 << std::popcount(mask);
  const std::size_t total = std::size_t{1} << num_vars_;
  m.compress.resize(total);
  for (std::size_t idx = 0; idx < total; ++idx)
    m.compress[idx] = compress_bits(static_cast<std::uint32_t>(idx), mask);
  marginals_.push_back(std::move(m));
}

double DirectedInfoEval::operator()(std::span<const double> masses) {
  double total = 0.0;
  for (const auto& m : marginals_) {
    if (m.sign == 0.0) continue;
    std::fill(scratch_.begin(), scratch_.begin() + m.out_size, 0.0);
    for (std::size_t idx = 0; idx < masses.size(); ++idx)
      scratch_[m.compress[idx]] += masses[idx];
    double h = 0.0;
    for (int j = 0; j < m.out_size; ++j) h += neg_x_log2_x(scratch_[j]);
    total += m.sign * h;
  }
  return total;
}

namespace {

double directed_information_impl(const JointTable& joint, int horizon, bool given_initial) {
  const int expected = (given_initial ? 1 : 0) + 2 * (horizon + 1);
  if (joint.num_vars() != expected)
    throw ValidationError("joint table has " + std::to_string(joint.num_vars()) +
                          " variables, expected " + std::to_string(expected));
  joint.validate();
  DirectedInfoEval eval(horizon, given_initial);
  const double v = eval(joint.masses());
  // Mild negative values are floating noise from the entropy differences.
  return v < 0.0 && v > -1e-12 ? 0.0 : v;
}

}  // namespace

double directed_information(const JointTable& joint, int horizon) {
  return directed_information_impl(joint, horizon, false);
}

double directed_information_given_initial(const JointTable& joint, int horizon) {
  return directed_information_impl(joint, horizon, true);
}

}  // namespace bssc
