#pragma once

#include <string>
#include <vector>

#include "pinch/cli/config.hpp"

namespace pinch::cli {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

struct CommandOutcome {
  int exit_code = kExitPass;
  /// Complete report except wall_time_ms, which the caller adds.
  Json report;
};

CommandOutcome cmd_certify(const RunConfig& cfg);
CommandOutcome cmd_optimize(const RunConfig& cfg);
CommandOutcome cmd_gamma(const RunConfig& cfg);
CommandOutcome cmd_identities(const RunConfig& cfg);
CommandOutcome cmd_models(const RunConfig& cfg);

/// Built-in lambda grid for `models`.
std::vector<Rational> builtin_model_lambdas();

/// Reads prior JSON reports; throws UsageError on unreadable or foreign files.
std::vector<Json> load_reports(const std::vector<std::string>& paths);

/// Parses argv, runs the command, writes outputs, returns the exit code.
int run_cli(int argc, char** argv);

}  // namespace pinch::cli
