#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace subcorona {

// Command-line front end. Exit codes: 0 success, 1 verification mismatch,
// 2 usage error, 3 unmet precondition (the error name goes to err).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace subcorona
