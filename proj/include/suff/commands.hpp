#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "suff/enumerate.hpp"
#include "suff/io.hpp"

namespace suff {

struct RunConfig {
  std::string space;           // fixture name or space JSON file
  std::size_t agents = 2;
  std::string rule;            // inline JSON object or path to a JSON file
  std::string axioms = "all";  // comma separated names, or "all"
  std::string satisfy;
  std::string violate;
  EnumerationMode mode = EnumerationMode::quotient;
  unsigned workers = 1;
  std::string target;          // reproduce only
  Limits limits;
};

struct CommandResult {
  int exit_code = 0;  // 0 holds, 1 property failure, 2 input error
  json report;
};

/// Comma separated axiom names; "all" means every axiom applicable to the domain.
std::vector<Axiom> parse_axiom_list(std::string_view text, const Domain& domain);

std::vector<std::string> reproduce_targets();

// Each command throws suff::Error on bad input; run_command turns that into
// exit code 2 and an error report.
CommandResult cmd_check(const RunConfig& config);
CommandResult cmd_derive(const RunConfig& config);
CommandResult cmd_enumerate(const RunConfig& config);
CommandResult cmd_search(const RunConfig& config);
CommandResult cmd_reproduce(const RunConfig& config);

CommandResult run_command(std::string_view command, const RunConfig& config);

}  // namespace suff
