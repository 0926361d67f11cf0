// SPDX-License-Identifier: Apache-2.0
#include "relaysim/uplink.hpp"

#include <cmath>
#include <stdexcept>

namespace relaysim {

double q_function(double x) {
    return 0.5 * std::erfc(x / std::sqrt(2.0));
}

std::pair<int, int> ml_detect(std::span<const cplx> received, const UplinkChannel& channel,
                              const Constellation& c, double tx_power) {
    const int n = channel.antennas();
    if (static_cast<int>(received.size()) != n) {
        throw std::invalid_argument("ml_detect: observation length does not match antenna count");
    }
    const double amp = std::sqrt(tx_power);

    int best_a = 0, best_b = 0;
    double best_metric = -1.0;
    for (int a = 0; a < c.order; ++a) {
        const cplx xa = amp * c.points[a];
        for (int b = 0; b < c.order; ++b) {
            const cplx xb = amp * c.points[b];
            double metric = 0.0;
            for (int i = 0; i < n; ++i) {
                metric += std::norm(received[i] - channel.a_to_relay[i] * xa -
                                    channel.b_to_relay[i] * xb);
            }
            if (best_metric < 0.0 || metric < best_metric) {
                best_metric = metric;
                best_a = a;
                best_b = b;
            }
        }
    }
    return {best_a, best_b};
}

std::pair<int, int> ml_detect(const UplinkObservation& obs, const Constellation& c,
                              double tx_power) {
    return ml_detect(std::span<const cplx>(obs.received), obs.channel, c, tx_power);
}

UnionBound union_bound_sep(const UplinkChannel& channel, const Constellation& c,
                           double noise_power, double tx_power) {
    if (noise_power <= 0.0) {
        throw std::invalid_argument("union_bound_sep: noise power must be positive");
    }
    const int n = channel.antennas();
    const double amp = std::sqrt(tx_power);
    const double inv_two_sigma_sq = 1.0 / (2.0 * noise_power);

    UnionBound bound;
    for (int a0 = 0; a0 < c.order; ++a0) {
        for (int b0 = 0; b0 < c.order; ++b0) {
            for (int a = 0; a < c.order; ++a) {
                const cplx da = amp * (c.points[a0] - c.points[a]);
                for (int b = 0; b < c.order; ++b) {
                    if (a == a0 && b == b0) continue;
                    const cplx db = amp * (c.points[b0] - c.points[b]);
                    double dist_sq = 0.0;
                    for (int i = 0; i < n; ++i) {
                        dist_sq += std::norm(channel.a_to_relay[i] * da +
                                             channel.b_to_relay[i] * db);
                    }
                    const double term = q_function(std::sqrt(dist_sq * inv_two_sigma_sq));
                    bound.pair_error += term;
                    if (b != b0) bound.marginal_b += term;
                }
            }
        }
    }
    const double pairs = static_cast<double>(c.order) * c.order;
    bound.pair_error /= pairs;
    bound.marginal_b /= pairs;
    return bound;
}

} // namespace relaysim
