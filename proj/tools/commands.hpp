#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "graphprod/config.hpp"

namespace graphprod::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kBudgetExceeded = 3, kInvariantViolation = 4 };

struct CommandOptions {
  std::vector<std::string> args;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> budget;
  std::optional<std::size_t> horizon;
  std::size_t radius = 3;
  std::size_t star_radius = 2;
  std::size_t samples = 200;
  bool right = false;
  std::string svg;
  std::string dot;
  std::string json;
};

const std::vector<std::string>& command_names();

/// P4 (a-b-c-d) over Z with H1 = <a:1.d:1> and H2 = <a:1.b:1>; used when no
/// --config is given.
ProjectConfig default_config();

/// Runs one command; never throws. Errors go to `err` with the matching exit code.
int run_command(const ProjectConfig& config, const std::string& command, const CommandOptions& options,
                std::ostream& out, std::ostream& err);

}  // namespace graphprod::cli
