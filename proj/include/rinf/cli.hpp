#pragma once

#include <string>
#include <vector>

#include "rinf/budget.hpp"
#include "rinf/json_io.hpp"

namespace rinf::cli {

enum ExitCode : int { Ok = 0, VerdictFalse = 1, BadInput = 2, OverBudget = 3 };

struct CommandResult {
  std::string command;            // subcommand path, e.g. "infinite classn"
  std::vector<std::string> args;  // arguments as given
  json_io::Json payload;
  int exit_code = Ok;
  /// Set instead of a payload for --help.
  std::string help;

  json_io::Json to_json() const;
};

/// Runs one command. args excludes the program name. Never throws for bad
/// input or budget overruns; those become exit codes 2 and 3 with an
/// {"error": ...} payload.
CommandResult run(const std::vector<std::string>& args, const Budgets& budgets = Budgets::from_env());

}  // namespace rinf::cli
