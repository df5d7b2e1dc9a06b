#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bssc/errors.hpp"

namespace bssc {

// Dense joint distribution over m binary variables, indexed by the packed
// tuple: bit k of the index is variable k. Dense storage is deliberate —
// the brute-force oracle wants exact, allocation-free marginalization and
// the tables stay small (m <= 20).
class JointTable {
 public:
  explicit JointTable(int num_vars);
  static JointTable from_masses(int num_vars, std::vector<double> masses);

  int num_vars() const { return num_vars_; }
  std::size_t size() const { return masses_.size(); }
  double mass(std::size_t packed) const { return masses_[packed]; }
  double& mass(std::size_t packed) { return masses_[packed]; }
  std::span<const double> masses() const { return masses_; }

  // Throws ValidationError unless masses are nonnegative and sum to 1
  // within tol.
  void validate(double tol = 1e-10) const;

  // Joint entropy (bits) of the variables selected by keep_mask.
  double marginal_entropy(std::uint32_t keep_mask) const;

  // New table over the kept variables, renumbered in ascending bit order.
  JointTable marginalized(std::uint32_t keep_mask) const;

 private:
  int num_vars_;
  std::vector<double> masses_;
};

// Precompiled evaluator for the per-step information sum
//   sum_i I(A^i; B_i | B^{i-1})           (given_initial = false)
//   sum_i I(A^i; B_i | B_init, B^{i-1})   (given_initial = true)
// over a packed joint table. Variable layout:
//   given_initial = false: var i = a_i (i <= n), var n+1+i = b_i
//   given_initial = true:  var 0 = b_init, var 1+i = a_i, var n+2+i = b_i
// Owns scratch buffers, so one instance can be reused across millions of
// evaluations without allocating.
class DirectedInfoEval {
 public:
  DirectedInfoEval(int horizon, bool given_initial);
  int num_vars() const { return num_vars_; }
  double operator()(std::span<const double> masses);

 private:
  struct Marginal {
    std::uint32_t mask;
    std::vector<std::uint32_t> compress;  // packed index -> compressed index
    int out_size;
    double sign;  // +1 or -1 contribution to the information sum
  };
  int num_vars_;
  std::vector<Marginal> marginals_;
  std::vector<double> scratch_;
  void add_mask(std::uint32_t mask, double sign);
};

// I(A^n -> B^n) = sum_{i=0}^{n} I(A^i; B_i | B^{i-1}), in bits, computed
// exactly from the joint by marginalization. Layout as in DirectedInfoEval
// with given_initial = false; joint must hold 2(n+1) variables.
double directed_information(const JointTable& joint, int horizon);

// Same sum with every term additionally conditioned on the initial output
// symbol (variable 0). Layout as in DirectedInfoEval with
// given_initial = true; joint must hold 2(n+1) + 1 variables.
double directed_information_given_initial(const JointTable& joint, int horizon);

}  // namespace bssc
