#pragma once

#include "tbtop/json_io.hpp"

namespace tbtop::ops {

inline constexpr const char* kVersion = "0.1.0";

/// One entry point per CLI subcommand; each takes a params object and
/// returns the outputs object embedded in the run report. All throw
/// InputError on malformed params and OpError on operational failures.
json eval(const json& params);
json certify(const json& params);
json separate(const json& params);
json distinguish(const json& params);
json generate(const json& params);
json validate(const json& params);
json snf(const json& params);
json quotient(const json& params);
json subgroups(const json& params);
json thm17(const json& params);
json extend(const json& params);
json dualcheck(const json& params);

/// Dispatch by subcommand name; throws InputError for unknown commands.
json run_op(const std::string& command, const json& params);

/// Full deterministic run report envelope.
json run_report(const std::string& command, const json& params);

}  // namespace tbtop::ops
