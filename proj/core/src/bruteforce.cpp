#include "bssc/bruteforce.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <thread>

namespace bssc {

int HistoryPolicy::slice_count(HistoryClass c, int time) {
  if (time == 0) return 1;
  switch (c) {
    case HistoryClass::prev_output:
      return 2;
    case HistoryClass::output_history:
      return 1 << time;
    case HistoryClass::joint_history:
      return 1 << (2 * time);
  }
  return 0;
}

std::uint64_t HistoryPolicy::parameter_count(HistoryClass c, int horizon) {
  std::uint64_t total = 0;
  for (int i = 0; i <= horizon; ++i) total += slice_count(c, i);
  return total;
}

namespace {

// slice index of time i given the path bits (a_0..a_{i-1}, b_0..b_{i-1})
inline int slice_of(HistoryClass c, int i, std::uint32_t a_bits, std::uint32_t b_bits) {
  if (i == 0) return 0;
  switch (c) {
    case HistoryClass::prev_output:
      return (b_bits >> (i - 1)) & 1u;
    case HistoryClass::output_history:
      return static_cast<int>(b_bits & ((1u << i) - 1u));
    case HistoryClass::joint_history:
      return static_cast<int>((a_bits & ((1u << i) - 1u)) |
                              ((b_bits & ((1u << i) - 1u)) << i));
  }
  return 0;
}

// Fills masses[2^(2n+3)] for layout (b_init, a_0..a_n, b_0..b_n).
template <typename PolicyTerm>
void fill_joint(const ChannelKernel& kernel, int n, const BinaryDist& init,
                PolicyTerm&& policy_term, std::vector<double>& masses) {
  const int vars = 2 * (n + 1) + 1;
  const std::size_t total = std::size_t{1} << vars;
  masses.resize(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    const int binit = static_cast<int>(idx & 1u);
    const std::uint32_t a_bits = (static_cast<std::uint32_t>(idx) >> 1) & ((1u << (n + 1)) - 1u);
    const std::uint32_t b_bits = static_cast<std::uint32_t>(idx) >> (n + 2);
    double p = init(binit);
    for (int i = 0; i <= n && p > 0.0; ++i) {
      const int a = (a_bits >> i) & 1u;
      const int b = (b_bits >> i) & 1u;
      const int b_prev = i == 0 ? binit : ((b_bits >> (i - 1)) & 1u);
      p *= policy_term(i, a, binit, a_bits, b_bits) * kernel(b, a, b_prev);
    }
    masses[idx] = p;
  }
}

}  // namespace

JointTable stationary_feedback_joint(const ChannelKernel& kernel, const FeedbackPolicy& policy,
                                     int horizon, const BinaryDist& initial_output) {
  std::vector<double> masses;
  fill_joint(kernel, horizon, initial_output,
             [&](int i, int a, int binit, std::uint32_t, std::uint32_t b_bits) {
               const int b_prev = i == 0 ? binit : ((b_bits >> (i - 1)) & 1u);
               return policy(a, b_prev);
             },
             masses);
  return JointTable::from_masses(2 * (horizon + 1) + 1, std::move(masses));
}

JointTable history_policy_joint(const ChannelKernel& kernel, const HistoryPolicy& policy,
                                const BinaryDist& initial_output) {
  const int n = policy.horizon;
  if (static_cast<int>(policy.tables.size()) != n + 1)
    throw ValidationError("history policy must provide one table per time step");
  for (int i = 0; i <= n; ++i)
    if (static_cast<int>(policy.tables[i].size()) !=
        HistoryPolicy::slice_count(policy.conditioning, i))
      throw ValidationError("history policy table " + std::to_string(i) + " has wrong size");
  std::vector<double> masses;
  fill_joint(kernel, n, initial_output,
             [&](int i, int a, int, std::uint32_t a_bits, std::uint32_t b_bits) {
               const double p0 =
                   policy.tables[i][slice_of(policy.conditioning, i, a_bits, b_bits)];
               return a == 0 ? p0 : 1.0 - p0;
             },
             masses);
  return JointTable::from_masses(2 * (n + 1) + 1, std::move(masses));
}

namespace {

struct ParamLayout {
  // flattened parameter j -> (time, slice)
  std::vector<std::pair<int, int>> where;
};

ParamLayout layout_of(HistoryClass c, int n) {
  ParamLayout l;
  for (int i = 0; i <= n; ++i)
    for (int s = 0; s < HistoryPolicy::slice_count(c, i); ++s) l.where.emplace_back(i, s);
  return l;
}

HistoryPolicy decode_policy(HistoryClass c, int n, const ParamLayout& layout, int grid_points,
                            std::uint64_t index) {
  HistoryPolicy p;
  p.horizon = n;
  p.conditioning = c;
  p.tables.resize(n + 1);
  for (int i = 0; i <= n; ++i)
    p.tables[i].assign(HistoryPolicy::slice_count(c, i), 0.0);
  // earlier parameters are the most significant digits
  const std::size_t np = layout.where.size();
  for (std::size_t j = np; j-- > 0;) {
    const auto [time, slice] = layout.where[j];
    p.tables[time][slice] =
        static_cast<double>(index % grid_points) / (grid_points - 1);
    index /= grid_points;
  }
  return p;
}

}  // namespace

BruteForceReport finite_horizon_bruteforce(const ChannelKernel& kernel,
                                           const BruteForceOptions& options) {
  const int n = options.horizon;
  if (n < 0 || n > 3) throw ValidationError("brute-force horizon must lie in 0..3");
  if (options.grid_points < 2 || options.grid_points > 21)
    throw ValidationError("grid_points must lie in 2..21");

  const ParamLayout layout = layout_of(options.conditioning, n);
  const std::uint64_t np = layout.where.size();
  const long double total_ld = std::pow(static_cast<long double>(options.grid_points),
                                        static_cast<long double>(np));
  if (total_ld > static_cast<long double>(options.evaluation_budget)) {
    const std::uint64_t required =
        total_ld > static_cast<long double>(UINT64_MAX)
            ? UINT64_MAX
            : static_cast<std::uint64_t>(total_ld);
    throw BudgetError("policy enumeration needs " + std::to_string(required) +
                          " evaluations, budget is " +
                          std::to_string(options.evaluation_budget),
                      required, options.evaluation_budget);
  }
  const std::uint64_t total = static_cast<std::uint64_t>(total_ld + 0.5L);

  const auto t_start = std::chrono::steady_clock::now();
  int nthreads = options.threads > 0
                     ? options.threads
                     : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  nthreads = static_cast<int>(std::min<std::uint64_t>(nthreads, total));

  struct Best {
    double value = -1.0;
    std::uint64_t index = 0;
    bool set = false;
  };
  std::vector<Best> bests(nthreads);

  // flat parameter index of (time, slice)
  std::vector<int> param_base(n + 2, 0);
  for (int i = 0; i <= n; ++i)
    param_base[i + 1] = param_base[i] + HistoryPolicy::slice_count(options.conditioning, i);
  std::vector<double> grid_values(options.grid_points);
  for (int g = 0; g < options.grid_points; ++g)
    grid_values[g] = static_cast<double>(g) / (options.grid_points - 1);

  auto worker = [&](int tid, std::uint64_t lo, std::uint64_t hi) {
    if (lo >= hi) return;
    DirectedInfoEval eval(n, true);
    std::vector<double> masses;
    std::vector<int> digits(np, 0);
    std::vector<double> pv(np, 0.0);
    // decode the first index of the chunk; later indices advance the odometer
    std::uint64_t rem = lo;
    for (std::size_t j = np; j-- > 0;) {
      digits[j] = static_cast<int>(rem % options.grid_points);
      pv[j] = grid_values[digits[j]];
      rem /= options.grid_points;
    }
    const HistoryClass cls = options.conditioning;
    Best local;
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      fill_joint(kernel, n, options.initial_output,
                 [&](int i, int a, int, std::uint32_t a_bits, std::uint32_t b_bits) {
                   const double p0 = pv[param_base[i] + slice_of(cls, i, a_bits, b_bits)];
                   return a == 0 ? p0 : 1.0 - p0;
                 },
                 masses);
      const double v = eval(masses) / (n + 1);
      if (!local.set || v > local.value) {
        local = Best{v, idx, true};
      }
      // increment, least significant (last) parameter first
      for (std::size_t j = np; j-- > 0;) {
        if (++digits[j] < options.grid_points) {
          pv[j] = grid_values[digits[j]];
          break;
        }
        digits[j] = 0;
        pv[j] = grid_values[0];
      }
    }
    bests[tid] = local;
  };

  std::vector<std::thread> pool;
  const std::uint64_t chunk = (total + nthreads - 1) / nthreads;
  for (int t = 0; t < nthreads; ++t)
    pool.emplace_back(worker, t, t * chunk, std::min(total, (t + 1) * chunk));
  for (auto& th : pool) th.join();

  Best overall;
  for (const auto& b : bests) {
    if (!b.set) continue;
    // ties resolve to the smallest policy index = lexicographically smallest
    // tables; chunks are scanned in index order, so this is thread-invariant.
    if (!overall.set || b.value > overall.value ||
        (b.value == overall.value && b.index < overall.index))
      overall = b;
  }

  BruteForceReport report;
  report.best_value = overall.value;
  report.best_policy =
      decode_policy(options.conditioning, n, layout, options.grid_points, overall.index);
  report.grid_resolution = 1.0 / (options.grid_points - 1);
  report.evaluations = total;
  report.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();
  return report;
}

}  // namespace bssc
