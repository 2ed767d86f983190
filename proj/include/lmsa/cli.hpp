#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lmsa {

// Front end shared by the lmsa binary and the CLI tests. `args` excludes the
// program name. Returns the process exit code: 0 success (including --help),
// 2 bad arguments or configuration, 3 I/O failure, 4 numeric failure,
// 1 anything else.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lmsa
