#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace corefactor {

// Entry point for the `corefactor` command-line tool; separated from main()
// so tests can drive it. Exit codes: 0 success, 1 domain/runtime error (a
// JSON object {"error": ...} is printed to err), 2 usage error.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace corefactor
