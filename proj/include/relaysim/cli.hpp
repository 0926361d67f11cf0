// SPDX-License-Identifier: Apache-2.0
#ifndef RELAYSIM_CLI_HPP
#define RELAYSIM_CLI_HPP

#include <iosfwd>

namespace relaysim {

/// Full command-line entry point (simulate / analyze / verify subcommands).
/// Returns the process exit code: 0 on success, 1 on runtime or numerical
/// failure (or failed verification), 2 on usage errors.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace relaysim

#endif
