// SPDX-License-Identifier: Apache-2.0
#include "relaysim/channel.hpp"

#include <stdexcept>

namespace relaysim {

namespace {

void check_args(int antennas, double channel_power, const char* who) {
    if (antennas < 1) {
        throw std::invalid_argument(std::string(who) + ": antennas must be >= 1");
    }
    if (channel_power < 0.0) {
        throw std::invalid_argument(std::string(who) + ": negative channel power");
    }
}

} // namespace

void sample_uplink(UplinkChannel& out, int antennas, double channel_power, RandomStream& stream) {
    check_args(antennas, channel_power, "sample_uplink");
    out.a_to_relay.resize(antennas);
    out.b_to_relay.resize(antennas);
    sample_complex_gaussian(out.a_to_relay, channel_power, stream);
    sample_complex_gaussian(out.b_to_relay, channel_power, stream);
}

void sample_downlink(DownlinkChannels& out, int antennas, double channel_power, RandomStream& stream) {
    check_args(antennas, channel_power, "sample_downlink");
    out.relay_to_a.resize(antennas);
    out.relay_to_b.resize(antennas);
    sample_complex_gaussian(out.relay_to_a, channel_power, stream);
    sample_complex_gaussian(out.relay_to_b, channel_power, stream);
}

UplinkChannel sample_uplink(int antennas, double channel_power, RandomStream& stream) {
    UplinkChannel ch;
    sample_uplink(ch, antennas, channel_power, stream);
    return ch;
}

DownlinkChannels sample_downlink(int antennas, double channel_power, RandomStream& stream) {
    DownlinkChannels ch;
    sample_downlink(ch, antennas, channel_power, stream);
    return ch;
}

} // namespace relaysim
