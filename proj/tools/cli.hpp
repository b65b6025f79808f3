#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace crossbial::cli {

// Exit codes: 0 pass, 1 verified failure, 2 usage or I/O error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace crossbial::cli
