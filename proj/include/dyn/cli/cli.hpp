#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dyn::cli {

// Runs the `dyn` command line; args excludes the program name. Returns 0 on
// success, 1 on a domain error (reported as JSON on err), 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dyn::cli
