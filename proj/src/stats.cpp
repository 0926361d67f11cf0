// SPDX-License-Identifier: Apache-2.0
#include "relaysim/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace relaysim {

std::pair<double, double> wilson_interval(int64_t successes, int64_t trials) {
    return wilson_interval(successes, trials, 1.959963984540054);  // two-sided 95%
}

std::pair<double, double> wilson_interval(int64_t successes, int64_t trials, double z) {
    if (trials < 1 || successes < 0 || successes > trials) {
        throw std::invalid_argument("wilson_interval: need 0 <= successes <= trials, trials >= 1");
    }
    if (z <= 0.0) {
        throw std::invalid_argument("wilson_interval: z must be positive");
    }
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    double lo = center - half;
    double hi = center + half;
    // The interval always contains the point estimate; guard against the
    // eps-level rounding that can nudge a bound past it (e.g. lo > 0 at
    // zero successes).
    if (lo < 0.0 || successes == 0) lo = 0.0;
    if (hi > 1.0 || successes == trials) hi = 1.0;
    if (lo > p) lo = p;
    if (hi < p) hi = p;
    return {lo, hi};
}

} // namespace relaysim
