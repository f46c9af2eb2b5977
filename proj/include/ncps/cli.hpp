#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncps::cli {

/// Runs the command-line front end. Exit codes: 0 success (and true
/// predicates), 1 mathematically false (non-member, inconsistent family,
/// cocycle failure, singular data), 2 usage or parse errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncps::cli
