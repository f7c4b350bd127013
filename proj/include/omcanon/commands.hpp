#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace omc {

struct CommandOptions {
  std::string command;  // info | canonical | basis | aomoto | verify
  std::string input;
  std::string tope;
  bool nonreduced = false;
  int grade = -1;  // reduced degree for `basis`; -1 means r-1
  std::uint64_t seed = 0;
  std::string weights;
  std::optional<std::string> base;
  std::string suite = "all";
};

/// Runs one command, writing a single JSON document to `out` and diagnostics
/// to `err`. Returns 0 on success, 1 on a failed verification or internal
/// invariant, 2 on bad input.
int run_command(const CommandOptions& opts, std::ostream& out, std::ostream& err);

/// Exhaustive chirotope validation unless OMCANON_VALIDATE=off or |E| > 10.
bool validation_enabled(int num_elements);

}  // namespace omc
