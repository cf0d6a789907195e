#pragma once

#include <vecvar/json_io.hpp>

#include <map>
#include <string>
#include <vector>

namespace vecvar {

// Exit codes: 0 ok, 1 domain error, 2 usage error.
struct CommandResult {
  int exit_code = 0;
  Json envelope;  // {"status": ..., "payload": ..., "diagnostics": [...]}

  std::string dump() const { return envelope.dump(2) + "\n"; }
};

// Dispatches one subcommand; `args` excludes the program name. All
// randomness sits behind an explicit --seed, so identical argument vectors
// produce byte-identical envelopes.
CommandResult run(const std::vector<std::string>& args);

// Which spec-level operations each subcommand exercises (directly or through
// the call graph); the exhaustiveness test checks that the union covers
// every operation in all_module_operations().
const std::map<std::string, std::vector<std::string>>& cli_operation_coverage();
std::vector<std::string> all_module_operations();

}  // namespace vecvar
