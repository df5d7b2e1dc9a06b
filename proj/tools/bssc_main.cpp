// Command-line front end: closed-form capacities, cost-curve sweeps,
// oracle verification runs, and Monte Carlo simulation.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/validation,
// 3 I/O failure.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "bssc/capacity.hpp"
#include "bssc/channel.hpp"
#include "bssc/json_io.hpp"
#include "bssc/simulator.hpp"
#include "bssc/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Relative output paths land in $BSSC_OUTPUT_DIR when it is set.
std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv("BSSC_OUTPUT_DIR")) p = std::filesystem::path(dir) / p;
  }
  return p;
}

void write_file(const std::string& path, const std::string& content) {
  const auto full = resolve_output(path);
  std::ofstream out(full, std::ios::binary);
  if (!out) throw IoError("cannot open " + full.string() + " for writing");
  out << content;
  if (!out) throw IoError("writing " + full.string() + " failed");
}

void emit(const std::optional<std::string>& out_path, const std::string& content) {
  if (out_path)
    write_file(*out_path, content);
  else
    std::cout << content;
}

struct CapacityArgs {
  double alpha = 0.0, beta = 0.0;
  std::optional<double> kappa;
  bool inequality = false;
  bool no_feedback = false;
  std::string format = "text";
  std::optional<std::string> out;
};

std::string capacity_text(const bssc::BsscParams& params, const bssc::CapacityResult& r,
                          const std::string& constraint) {
  std::ostringstream os;
  os.precision(12);
  os << "channel: alpha=" << params.alpha() << " beta=" << params.beta() << "\n";
  if (params.flags().any())
    os << "canonical form of the requested channel (cost_reversed="
       << params.flags().cost_reversed << ")\n";
  os << "constraint: " << constraint << "\n"
     << "capacity: " << r.capacity << " bits/use\n"
     << "kappa: " << r.kappa << "\n"
     << "lambda: " << r.lambda << "\n"
     << "input P(a|b_prev): [[" << r.input.matrix()(0, 0) << ", " << r.input.matrix()(0, 1)
     << "], [" << r.input.matrix()(1, 0) << ", " << r.input.matrix()(1, 1) << "]]\n"
     << "output P(b|b_prev): [[" << r.output_kernel(0, 0) << ", " << r.output_kernel(0, 1)
     << "], [" << r.output_kernel(1, 0) << ", " << r.output_kernel(1, 1) << "]]\n";
  if (r.markov_input) {
    const auto& m = r.markov_input->matrix();
    os << "markov P(a|a_prev): [[" << m(0, 0) << ", " << m(0, 1) << "], [" << m(1, 0) << ", "
       << m(1, 1) << "]]\n";
  }
  if (r.degenerate) os << "degenerate: alpha + beta = 1, zero capacity at every kappa\n";
  return os.str();
}

int cmd_capacity(const CapacityArgs& args) {
  const bssc::BsscParams params(args.alpha, args.beta);
  std::string constraint = "none";
  bssc::CapacityResult r = [&] {
    if (!args.kappa) return bssc::capacity_fb(params);
    constraint = args.inequality ? "inequality" : "equality";
    return args.inequality
               ? bssc::capacity_fb_cost_inequality(params, bssc::Prob(*args.kappa))
               : bssc::capacity_fb_cost(params, bssc::Prob(*args.kappa));
  }();
  if (args.no_feedback && !params.sum_degenerate())
    r.markov_input = bssc::markov_nofb_policy(params, bssc::Prob(r.kappa));
  emit(args.out, args.format == "json" ? bssc::capacity_to_json(params, r, constraint) + "\n"
                                       : capacity_text(params, r, constraint));
  return kExitOk;
}

struct SweepArgs {
  double alpha = 0.0, beta = 0.0;
  double step = 0.025;
  std::optional<std::string> out;
};

int cmd_sweep(const SweepArgs& args) {
  const bssc::BsscParams params(args.alpha, args.beta);
  if (!(args.step > 0.0 && args.step <= 0.5))
    throw bssc::ValidationError("sweep step must lie in (0, 0.5]");
  std::ostringstream os;
  os.precision(12);
  os << "kappa,capacity,lambda,p00,markov_feasible\n";
  const int n = static_cast<int>(std::lround(1.0 / args.step));
  for (int i = 0; i <= n; ++i) {
    const double kappa = i == n ? 1.0 : i * args.step;
    const bssc::CapacityResult r = bssc::capacity_fb_cost(params, bssc::Prob(kappa));
    bool feasible = true;
    try {
      (void)bssc::markov_nofb_policy(params, bssc::Prob(kappa));
    } catch (const bssc::Error&) {
      feasible = false;
    }
    os << kappa << ',' << r.capacity << ',' << r.lambda << ',' << r.input.matrix()(0, 0)
       << ',' << (feasible ? 1 : 0) << '\n';
  }
  emit(args.out, os.str());
  return kExitOk;
}

struct VerifyArgs {
  std::optional<double> alpha, beta, kappa;
  int horizon = 1;
  double perturb_lambda = 0.0;
  std::optional<std::string> out;
};

int cmd_verify(const VerifyArgs& args) {
  bssc::VerifyOptions opt;
  opt.alpha = args.alpha;
  opt.beta = args.beta;
  opt.kappa = args.kappa;
  opt.bruteforce_horizon = args.horizon;
  opt.lambda_perturbation = args.perturb_lambda;
  const bssc::VerifyReport report = bssc::run_verification(opt);
  emit(args.out, bssc::verify_report_to_json(report) + "\n");
  if (!report.pass) {
    for (const auto& c : report.checks)
      if (!c.pass)
        std::cerr << "breach: " << c.name << " residual " << c.residual << " > tolerance "
                  << c.tolerance << "\n";
  }
  return report.pass ? kExitOk : kExitVerifyFailed;
}

struct SimulateArgs {
  double alpha = 0.0, beta = 0.0;
  std::optional<double> kappa;
  std::uint64_t steps = 1000000;
  std::uint64_t seed = 1;
  std::uint64_t burn_in = 1000;
  bool markov = false;
  std::string trace_out = "trace.csv";
  std::string estimate_out = "estimate.json";
};

std::string trace_csv(const bssc::Trace& t) {
  std::ostringstream os;
  os << "# seed=" << t.seed << "\n# generator=" << t.generator << "\n# steps=" << t.steps
     << "\n# burn_in=" << t.burn_in << "\n# b_init=" << t.b_init << "\n";
  os << "i,a,b,s\n";
  for (std::size_t i = 0; i < t.a.size(); ++i)
    os << i << ',' << int(t.a[i]) << ',' << int(t.b[i]) << ',' << int(t.s[i]) << '\n';
  return os.str();
}

int cmd_simulate(const SimulateArgs& args) {
  const bssc::BsscParams params(args.alpha, args.beta);
  const double kappa = args.kappa ? *args.kappa : bssc::kappa_star(params).value();
  const bssc::ChannelKernel kernel = bssc::bssc_kernel(params);
  const bssc::Trace trace =
      args.markov
          ? bssc::simulate(kernel, bssc::markov_nofb_policy(params, bssc::Prob(kappa)),
                           args.steps, args.seed, args.burn_in)
          : bssc::simulate(kernel,
                           bssc::FeedbackPolicy(bssc::Matrix2::symmetric(bssc::Prob(kappa))),
                           args.steps, args.seed, args.burn_in);
  const bssc::EmpiricalEstimate est = bssc::estimate(trace, kernel);
  write_file(args.trace_out, trace_csv(trace));
  write_file(args.estimate_out, bssc::estimate_to_json(est, args.seed, args.burn_in) + "\n");

  const bssc::CapacityResult closed = bssc::capacity_fb_cost(params, bssc::Prob(kappa));
  std::cout.precision(9);
  std::cout << "policy: " << (args.markov ? "markov" : "feedback") << " at kappa=" << kappa
            << "\nrate_hat " << est.rate_hat << " +- " << est.stderr_rate << " (closed form "
            << closed.capacity << ")\ncost_hat " << est.cost_hat << " +- " << est.stderr_cost
            << " (target " << kappa << ")\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binary state symmetric channel capacity toolkit"};
  app.require_subcommand(1);

  CapacityArgs cap;
  auto* c = app.add_subcommand("capacity", "closed-form capacity and achieving laws");
  c->add_option("--alpha", cap.alpha, "state-0 arm parameter")->required();
  c->add_option("--beta", cap.beta, "state-1 arm parameter")->required();
  c->add_option("--kappa", cap.kappa, "cost level; omit for the unconstrained problem");
  c->add_flag("--inequality", cap.inequality, "treat the cost constraint as an upper bound");
  c->add_flag("--no-feedback", cap.no_feedback, "attach the equivalent Markov input");
  c->add_option("--format", cap.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  c->add_option("--out", cap.out, "write to file instead of stdout");

  SweepArgs sw;
  auto* s = app.add_subcommand("sweep", "CSV of the capacity-cost curve");
  s->add_option("--alpha", sw.alpha)->required();
  s->add_option("--beta", sw.beta)->required();
  s->add_option("--step", sw.step, "kappa grid step (default 0.025)");
  s->add_option("--out", sw.out, "write CSV to file instead of stdout");

  VerifyArgs vf;
  auto* v = app.add_subcommand("verify", "run the numeric oracles against the closed forms");
  v->add_option("--alpha", vf.alpha);
  v->add_option("--beta", vf.beta);
  v->add_option("--kappa", vf.kappa, "extra constrained check point");
  v->add_option("--horizon", vf.horizon, "brute-force horizon (0..2; 2 is slow)")
      ->check(CLI::Range(0, 2));
  v->add_option("--out", vf.out, "write the JSON report to a file");
  v->add_option("--perturb-lambda", vf.perturb_lambda)->group("");  // test hook, hidden

  SimulateArgs sim;
  auto* m = app.add_subcommand("simulate", "Monte Carlo run with empirical estimates");
  m->add_option("--alpha", sim.alpha)->required();
  m->add_option("--beta", sim.beta)->required();
  m->add_option("--kappa", sim.kappa, "cost level; default is the optimal time sharing");
  m->add_option("--steps", sim.steps);
  m->add_option("--seed", sim.seed);
  m->add_option("--burn-in", sim.burn_in);
  m->add_flag("--markov", sim.markov, "drive the channel with the Markov input");
  m->add_option("--trace-out", sim.trace_out, "trace CSV path (default trace.csv)");
  m->add_option("--estimate-out", sim.estimate_out, "estimate JSON path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (c->parsed()) return cmd_capacity(cap);
    if (s->parsed()) return cmd_sweep(sw);
    if (v->parsed()) return cmd_verify(vf);
    if (m->parsed()) return cmd_simulate(sim);
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kExitIo;
  } catch (const bssc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
