#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hgx {

// Entry point behind the hgx binary, separated so tests can drive it with
// captured streams. `args` excludes the program name.
//
// Exit codes: 0 success (or "equal"), 2 usage or input error, 3 a check
// failed or the inputs were distinguished, 4 search budget exceeded. All
// data output goes to `out`; the effective configuration echo, help text
// and diagnostics go to `err`. User errors never escape as exceptions.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hgx
