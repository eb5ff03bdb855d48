#ifndef P3STAB_CLI_HPP
#define P3STAB_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace p3stab {

/// Dispatch one command line (without the program name). Results go to
/// `out` as JSON, errors to `err`. Returns the process exit status:
/// 0 success, 1 usage error, 2 domain error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace p3stab

#endif
