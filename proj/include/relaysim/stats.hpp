// SPDX-License-Identifier: Apache-2.0
#ifndef RELAYSIM_STATS_HPP
#define RELAYSIM_STATS_HPP

#include <cstdint>
#include <utility>

namespace relaysim {

/// 95% Wilson score interval for a binomial proportion. Stable at zero or
/// near-zero error counts, where the Wald interval collapses. The overload
/// takes an explicit normal quantile for other coverage levels.
std::pair<double, double> wilson_interval(int64_t successes, int64_t trials);
std::pair<double, double> wilson_interval(int64_t successes, int64_t trials, double z);

} // namespace relaysim

#endif
