#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fusionfact::cli {

/// Runs one command (args exclude the program name). Exit status: 0 when
/// computed, 1 for input errors, 2 for internal invariant failures.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace fusionfact::cli
