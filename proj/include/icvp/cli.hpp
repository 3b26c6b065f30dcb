#ifndef ICVP_CLI_HPP
#define ICVP_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace icvp {

enum ExitCode : int { kExitPass = 0, kExitInternal = 1, kExitUsage = 2, kExitFail = 3 };

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace icvp

#endif  // ICVP_CLI_HPP
