#include "bssc/json_io.hpp"

#include <json.hpp>

namespace bssc {

using nlohmann::json;

namespace {

json matrix_to_json(const Matrix2& m) {
  return json::array({json::array({m(0, 0), m(0, 1)}), json::array({m(1, 0), m(1, 1)})});
}

json params_json(const BsscParams& p) {
  return json{{"alpha", p.alpha()},
              {"beta", p.beta()},
              {"flags",
               {{"input_flip_state0", p.flags().input_flip_state0},
                {"input_flip_state1", p.flags().input_flip_state1},
                {"cost_reversed", p.flags().cost_reversed}}}};
}

}  // namespace

std::string params_to_json(const BsscParams& params, int indent) {
  json j = params_json(params);
  j["schema_version"] = kSchemaVersion;
  return j.dump(indent);
}

BsscParams params_from_json(const std::string& text) {
  const json j = json::parse(text);
  if (!j.contains("alpha") || !j.contains("beta"))
    throw ValidationError("params document needs alpha and beta");
  return BsscParams(j["alpha"].get<double>(), j["beta"].get<double>());
}

std::string kernel_to_json(const ChannelKernel& kernel, int indent) {
  json rows = json::array();
  for (int a = 0; a < 2; ++a)
    for (int bp = 0; bp < 2; ++bp)
      rows.push_back(json{{"a", a},
                          {"b_prev", bp},
                          {"p_b0", kernel(0, a, bp)},
                          {"p_b1", kernel(1, a, bp)}});
  return json{{"schema_version", kSchemaVersion}, {"entries", rows}}.dump(indent);
}

std::string capacity_to_json(const BsscParams& params, const CapacityResult& r,
                             const std::string& constraint, int indent) {
  json j = {{"schema_version", kSchemaVersion},
            {"channel", params_json(params)},
            {"constraint", constraint},
            {"capacity_bits", r.capacity},
            {"kappa", r.kappa},
            {"lambda", r.lambda},
            {"feedback_policy", matrix_to_json(r.input.matrix())},
            {"output_kernel", matrix_to_json(r.output_kernel)},
            {"output_marginal", json::array({r.output_marginal(0), r.output_marginal(1)})},
            {"degenerate", r.degenerate}};
  if (r.markov_input) j["markov_policy"] = matrix_to_json(r.markov_input->matrix());
  return j.dump(indent);
}

std::string oracle_report_to_json(const OracleReport& report, int indent) {
  return json{{"schema_version", kSchemaVersion},
              {"value", report.best_value},
              {"policy", json::array({report.best_point[0], report.best_point[1]})},
              {"resolution", report.grid_resolution},
              {"residual", report.constraint_residual},
              {"evaluations", report.evaluations},
              {"wall_time", report.wall_time_s}}
      .dump(indent);
}

std::string verify_report_to_json(const VerifyReport& report, int indent) {
  json checks = json::array();
  for (const auto& c : report.checks)
    checks.push_back(json{{"name", c.name},
                          {"residual", c.residual},
                          {"tolerance", c.tolerance},
                          {"pass", c.pass}});
  return json{{"schema_version", kSchemaVersion},
              {"pass", report.pass},
              {"checks", checks},
              {"wall_time", report.wall_time_s}}
      .dump(indent);
}

std::string estimate_to_json(const EmpiricalEstimate& est, std::uint64_t seed,
                             std::uint64_t burn_in, int indent) {
  json counts = json::array();
  for (int a = 0; a < 2; ++a) {
    json bp_rows = json::array();
    for (int bp = 0; bp < 2; ++bp)
      bp_rows.push_back(json::array(
          {est.transition_counts[a][bp][0], est.transition_counts[a][bp][1]}));
    counts.push_back(bp_rows);
  }
  return json{{"schema_version", kSchemaVersion},
              {"rate_hat", est.rate_hat},
              {"cost_hat", est.cost_hat},
              {"stderr_rate", est.stderr_rate},
              {"stderr_cost", est.stderr_cost},
              {"output_p0_hat", est.output_p0_hat},
              {"kernel_deviation", est.kernel_deviation},
              {"transition_counts", counts},
              {"steps", est.steps},
              {"burn_in", burn_in},
              {"seed", seed},
              {"generator", kGeneratorName},
              {"block_length", est.block_length},
              {"resamples", est.resamples}}
      .dump(indent);
}

}  // namespace bssc
