#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gf2f {

// Full command-line driver, separated from main() so tests can run it
// against string streams. args excludes the program name. Returns the
// process exit code: 0 on success (and on an all-pass verify), 1 when a
// verification suite reports a failing claim, 2 on usage, parse, domain,
// or resource errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace gf2f
