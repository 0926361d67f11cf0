// SPDX-License-Identifier: Apache-2.0
#ifndef RELAYSIM_UPLINK_HPP
#define RELAYSIM_UPLINK_HPP

#include "relaysim/channel.hpp"
#include "relaysim/constellation.hpp"
#include "relaysim/types.hpp"

#include <span>
#include <utility>

namespace relaysim {

/// One uplink channel use as seen by the relay.
struct UplinkObservation {
    cvec received;            // y_R, length N
    UplinkChannel channel;    // H_up = (h_AR h_BR)
    double noise_power = 0.0; // sigma_R^2
};

/// Gaussian tail probability Q(x) = P(N(0,1) > x).
double q_function(double x);

/// Joint maximum-likelihood detection of (s_A, s_B) at the relay:
/// exhaustive argmin over all M^2 candidate pairs of
/// ||y_R - H_up (sqrt(P) p_a, sqrt(P) p_b)^T||^2, ties broken
/// lexicographically by (a, b).
std::pair<int, int> ml_detect(std::span<const cplx> received, const UplinkChannel& channel,
                              const Constellation& c, double tx_power);
std::pair<int, int> ml_detect(const UplinkObservation& obs, const Constellation& c,
                              double tx_power);

/// Union bound on the relay's ML detection error for one channel
/// realization, averaged over all M^2 equiprobable transmitted pairs.
/// `pair_error` sums over every wrong pair; `marginal_b` restricts the sum
/// to candidates whose B-symbol differs (the bound that feeds the
/// end-to-end B-to-A error budget). Values may exceed 1; callers clamp at
/// emission time.
struct UnionBound {
    double pair_error = 0.0;
    double marginal_b = 0.0;
};

UnionBound union_bound_sep(const UplinkChannel& channel, const Constellation& c,
                           double noise_power, double tx_power);

} // namespace relaysim

#endif
