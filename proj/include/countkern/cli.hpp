#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace countkern {

enum ExitCode : int {
	exit_ok = 0,
	exit_verification_failed = 1,
	exit_usage = 2,
	exit_input = 3,
	exit_size_guard = 4,
};

/// Runs the command line front end; `args` excludes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace countkern
