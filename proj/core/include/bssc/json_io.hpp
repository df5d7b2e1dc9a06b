#pragma once

#include <string>

#include "bssc/bruteforce.hpp"
#include "bssc/capacity.hpp"
#include "bssc/channel.hpp"
#include "bssc/oracles.hpp"
#include "bssc/simulator.hpp"
#include "bssc/verify.hpp"

namespace bssc {

// JSON documents all carry "schema_version": 1. Field layout is documented
// in docs/formats.md.
inline constexpr int kSchemaVersion = 1;

std::string params_to_json(const BsscParams& params, int indent = 2);
BsscParams params_from_json(const std::string& text);

std::string kernel_to_json(const ChannelKernel& kernel, int indent = 2);

// Full capacity record: parameters, kappa/lambda, value, achieving input and
// output laws, degeneracy flag and (when present) the Markov input.
std::string capacity_to_json(const BsscParams& params, const CapacityResult& result,
                             const std::string& constraint, int indent = 2);

std::string oracle_report_to_json(const OracleReport& report, int indent = 2);
std::string verify_report_to_json(const VerifyReport& report, int indent = 2);
std::string estimate_to_json(const EmpiricalEstimate& est, std::uint64_t seed,
                             std::uint64_t burn_in, int indent = 2);

}  // namespace bssc
