#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace rds::cli {

enum class Status { ok, violation, error };

std::string_view to_string(Status s);

/// 0 for ok, 1 for violation, 2 for error.
int exit_code(Status s);

struct Diagnostic {
  std::string level;  // "info", "violation" or "error"
  std::string code;
  std::string message;
};

struct CommandResult {
  std::string command;
  Status status = Status::ok;
  nlohmann::json payload;  // null unless the command produced a full result
  std::vector<Diagnostic> diagnostics;
};

nlohmann::json to_json(const CommandResult& r);

/// Runs one subcommand. `args` excludes the program name. Inputs that are not
/// named files are read from `in`; search progress events go to `events` as
/// one JSON object per line. Never throws.
CommandResult run(const std::vector<std::string>& args, std::istream& in, std::ostream& events);

}  // namespace rds::cli
