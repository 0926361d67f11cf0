// SPDX-License-Identifier: Apache-2.0
#include "relaysim/channel.hpp"

#include <cmath>

#include <doctest.h>

using namespace relaysim;

TEST_CASE("uplink and downlink draws have the right shapes") {
    RandomStream s(1, 0);
    const UplinkChannel up = sample_uplink(3, 1.0, s);
    CHECK(up.antennas() == 3);
    CHECK(up.a_to_relay.size() == 3);
    CHECK(up.b_to_relay.size() == 3);
    const DownlinkChannels down = sample_downlink(5, 0.5, s);
    CHECK(down.antennas() == 5);
}

TEST_CASE("bad channel parameters are rejected") {
    RandomStream s(1, 0);
    CHECK_THROWS_AS(sample_uplink(0, 1.0, s), std::invalid_argument);
    CHECK_THROWS_AS(sample_downlink(2, -1.0, s), std::invalid_argument);
}

TEST_CASE("different stream indices give different realizations") {
    RandomStream s0(9, 0);
    RandomStream s1(9, 1);
    const UplinkChannel a = sample_uplink(2, 1.0, s0);
    const UplinkChannel b = sample_uplink(2, 1.0, s1);
    CHECK(a.a_to_relay != b.a_to_relay);
}

TEST_CASE("||h_RA||^2 has Gamma(N, sigma0^2) moments") {
    // Sum of N unit-mean exponentials: mean N*sigma0^2, variance N*sigma0^4.
    RandomStream s(2718, 0);
    const int n = 4;
    const std::size_t draws = 1000000;
    double sum = 0.0, sum_sq = 0.0;
    DownlinkChannels d;
    for (std::size_t i = 0; i < draws; ++i) {
        sample_downlink(d, n, 1.0, s);
        double p = 0.0;
        for (const auto& h : d.relay_to_a) p += std::norm(h);
        sum += p;
        sum_sq += p * p;
    }
    const double mean = sum / static_cast<double>(draws);
    const double var = sum_sq / static_cast<double>(draws) - mean * mean;
    CHECK(mean == doctest::Approx(4.0).epsilon(0.0075));  // 4.0 +/- 0.03
    CHECK(var == doctest::Approx(4.0).epsilon(0.03));
}

TEST_CASE("channel power scales the per-entry mean") {
    RandomStream s(99, 0);
    const std::size_t draws = 200000;
    double sum = 0.0;
    UplinkChannel up;
    for (std::size_t i = 0; i < draws; ++i) {
        sample_uplink(up, 1, 2.5, s);
        sum += std::norm(up.b_to_relay[0]);
    }
    CHECK(sum / static_cast<double>(draws) == doctest::Approx(2.5).epsilon(0.02));
}
