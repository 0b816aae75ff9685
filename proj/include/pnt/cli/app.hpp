#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace pnt::cli {

enum ExitCode : int { exit_ok = 0, exit_usage = 1, exit_data = 2, exit_contract = 3 };

/// Runs one `pnt` invocation. `args` excludes the program name. Tables go to
/// `out`, messages and usage text to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pnt::cli
