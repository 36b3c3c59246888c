#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "placeforge/cli/job_spec.hpp"

namespace placeforge {

/// The commands understood by run_command.
const std::vector<std::string>& command_names();

/// Runs one command and returns its report. Throws on any failure.
Json run_command(const std::string& command, const Job& job);

/// The whole command line (without the program name). Writes the report to
/// `out` (or to the output file) and diagnostics to `err`; returns the exit
/// code: 0 on success, 2 for an infeasible shape, 1 for anything else.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace placeforge
