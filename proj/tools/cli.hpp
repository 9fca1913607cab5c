#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace incompat::cli {

/** Exit codes: 0 success, 1 other failure, 2 invalid input, 3 cap exceeded, 4 solver failure. */
int run(int argc, char** argv);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace incompat::cli
