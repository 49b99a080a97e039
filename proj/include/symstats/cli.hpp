#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace symstats {

/// Command-line entry point, separated from main() so tests can drive it.
/// args excludes the program name. Returns 0 on success, 1 on usage errors,
/// 2 on data errors (unreadable, malformed or invalid input); error text
/// goes to err, reports to out.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace symstats
