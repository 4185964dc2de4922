#pragma once
// Command-line front end. Exit codes: 0 success, 1 usage or parse error,
// 2 the program violates a precondition of the requested engine, 3 an
// enumeration budget was exceeded.

#include <iosfwd>
#include <string>
#include <vector>

namespace catoms::cli {

enum ExitCode : int { ok = 0, usage_error = 1, precondition_error = 2, cap_error = 3 };

/// `args` excludes the program name. Program files named "-" are read from
/// `in`. CATOMS_CAP in the environment sets the default candidate budget.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace catoms::cli
