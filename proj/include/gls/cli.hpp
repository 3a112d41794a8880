#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace gls::cli {

// Full command-line driver; args excludes the program name.  Writes the
// JSON result to out and a short summary to err (suppressed by --quiet).
// Returns 0 on success / verdict true, 1 on verdict false, 2 on input or
// validation errors.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace gls::cli
