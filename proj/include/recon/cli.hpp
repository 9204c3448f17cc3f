#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace recon::cli {

/// Runs the command line given by args (without the program name), writing
/// data to out and diagnostics to err.  Returns 0 on success, 1 on
/// verification failure or evaluation at a pole, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace recon::cli
