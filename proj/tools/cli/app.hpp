#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace locdom::cli {

// Entry point for the `locdom` executable; `args` excludes argv[0].
// Returns the process exit status (see exit_codes.hpp).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace locdom::cli
