#pragma once

#include <string>
#include <vector>

namespace fpg::cli {

struct CommandResult {
  int exit_code = 0;
  std::string out;  // JSON (or CSV) payload
  std::string err;  // diagnostics and usage text
};

/// Runs one command line, without the program name. Exit codes: 0 success,
/// 1 domain error (or a failed verify), 2 usage error.
CommandResult run(const std::vector<std::string>& args);

}  // namespace fpg::cli
