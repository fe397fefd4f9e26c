#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chl::cli {

/// Runs one command. `args` excludes the program name. Returns the exit
/// code: 0 valid or proved, 1 invalid or not provable, 2 usage or input error.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace chl::cli
