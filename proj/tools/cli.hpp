#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wsat::cli {

enum Exit { ok = 0, verification_failed = 1, usage = 2, inconclusive = 3 };

// args excludes the program name.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace wsat::cli
