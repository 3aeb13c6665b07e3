#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace gt {

// Entry point behind the `gt` binary, separated for testing.  `args` holds
// the command-line arguments without the program name.  Returns the process
// exit code: 0 success, 2 malformed input (flags or word/JSON text),
// 3 structurally invalid or inconsistent mathematics (InputError,
// GenericityError, ConsistencyError), 4 a property suite found failures.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gt
