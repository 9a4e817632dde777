#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace su2cp::cli {

/// Dispatches the command line (without the program name). Normal output is
/// written to `out`, diagnostics to `err`. Returns 0 on success, 1 when a
/// verification check fails, 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace su2cp::cli
