#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace morsetree::cli {

// `args` excludes the program name. Exit codes: 0 success (or "equivalent"), 1 "not equivalent" / failed
// checks, 2 bad usage, unreadable or invalid input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace morsetree::cli
