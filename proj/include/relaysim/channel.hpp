// SPDX-License-Identifier: Apache-2.0
#ifndef RELAYSIM_CHANNEL_HPP
#define RELAYSIM_CHANNEL_HPP

#include "relaysim/random.hpp"
#include "relaysim/types.hpp"

namespace relaysim {

/// Uplink block-fading realization: node A / node B to each of the N relay
/// antennas. Entries are i.i.d. CN(0, sigma0_sq).
struct UplinkChannel {
    cvec a_to_relay;  // h_AR, length N
    cvec b_to_relay;  // h_BR, length N

    int antennas() const { return static_cast<int>(a_to_relay.size()); }
};

/// Downlink realization: relay antennas to node A / node B, independent of
/// the uplink but with the same per-entry mean power.
struct DownlinkChannels {
    cvec relay_to_a;  // h_RA, length N
    cvec relay_to_b;  // h_RB, length N

    int antennas() const { return static_cast<int>(relay_to_a.size()); }
};

UplinkChannel sample_uplink(int antennas, double channel_power, RandomStream& stream);
DownlinkChannels sample_downlink(int antennas, double channel_power, RandomStream& stream);

/// In-place variants that reuse caller-owned buffers (hot path of the Monte
/// Carlo engine). Vectors are resized to `antennas`.
void sample_uplink(UplinkChannel& out, int antennas, double channel_power, RandomStream& stream);
void sample_downlink(DownlinkChannels& out, int antennas, double channel_power, RandomStream& stream);

} // namespace relaysim

#endif
