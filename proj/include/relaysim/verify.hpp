// SPDX-License-Identifier: Apache-2.0
#ifndef RELAYSIM_VERIFY_HPP
#define RELAYSIM_VERIFY_HPP

#include <iosfwd>
#include <vector>

namespace relaysim {

/// Options for the built-in verification suite.
struct VerifyOptions {
    bool quick = false;             // reduced trials, widened tolerances (stated in the report)
    std::vector<int> only;          // run just these criterion numbers (1-based); empty = all
    bool negative_control = false;  // corrupt one tolerance to prove failures are detected
};

/// Runs the verification suite, printing one PASS/FAIL line per criterion
/// (plus detail lines) to `out`. Returns true iff every executed criterion
/// passed.
bool run_verification(const VerifyOptions& options, std::ostream& out);

} // namespace relaysim

#endif
