#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace maxcorr {

// Dispatches the tool's subcommands. `args` excludes the program name.
// Returns 0 on success, 1 on computation errors, 2 on usage or parse errors;
// diagnostics go to `err`, results (JSON) to `out` unless --out is given.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace maxcorr
