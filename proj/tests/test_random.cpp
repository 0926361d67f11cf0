// SPDX-License-Identifier: Apache-2.0
#include "relaysim/random.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <doctest.h>

using namespace relaysim;

TEST_CASE("philox4x32 reproduces the published known-answer vectors") {
    // Reference vectors from the Random123 test suite (philox4x32, 10 rounds).
    const auto zero = philox4x32({0, 0, 0, 0}, {0, 0});
    CHECK(zero == std::array<uint32_t, 4>{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});

    const auto ones = philox4x32({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu},
                                 {0xffffffffu, 0xffffffffu});
    CHECK(ones == std::array<uint32_t, 4>{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});

    const auto pi = philox4x32({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u},
                               {0xa4093822u, 0x299f31d0u});
    CHECK(pi == std::array<uint32_t, 4>{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
}

TEST_CASE("same (seed, stream) replays the identical draw sequence") {
    RandomStream a(987654321u, 17);
    RandomStream b(987654321u, 17);
    for (int i = 0; i < 100; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
    const cvec va = sample_complex_gaussian(32, 1.0, a);
    const cvec vb = sample_complex_gaussian(32, 1.0, b);
    CHECK(va == vb);
}

TEST_CASE("distinct stream indices give distinct realizations") {
    RandomStream a(5, 0);
    RandomStream b(5, 1);
    const cvec va = sample_complex_gaussian(8, 1.0, a);
    const cvec vb = sample_complex_gaussian(8, 1.0, b);
    CHECK(va != vb);
}

TEST_CASE("zero variance degenerates to the zero vector") {
    RandomStream s(1, 2);
    const cvec v = sample_complex_gaussian(16, 0.0, s);
    for (const auto& z : v) {
        CHECK(z == cplx{0.0, 0.0});
    }
}

TEST_CASE("negative variance is rejected") {
    RandomStream s(1, 2);
    cvec buf(4);
    CHECK_THROWS_AS(sample_complex_gaussian(std::span<cplx>(buf), -1.0, s), std::invalid_argument);
    CHECK_THROWS_AS(s.next_complex_gaussian(-0.5), std::invalid_argument);
}

TEST_CASE("per-entry mean power matches the requested variance") {
    RandomStream s(2024, 0);
    const std::size_t n = 1000000;
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sum += std::norm(s.next_complex_gaussian(1.0));
    }
    const double mean = sum / static_cast<double>(n);
    CHECK(mean == doctest::Approx(1.0).epsilon(0.01));
}

TEST_CASE("components are zero-mean with variance/2 each") {
    RandomStream s(77, 3);
    const std::size_t n = 200000;
    double mean_re = 0.0, mean_im = 0.0, var_re = 0.0, var_im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const cplx z = s.next_complex_gaussian(4.0);
        mean_re += z.real();
        mean_im += z.imag();
        var_re += z.real() * z.real();
        var_im += z.imag() * z.imag();
    }
    const double dn = static_cast<double>(n);
    CHECK(mean_re / dn == doctest::Approx(0.0).epsilon(1.0).scale(0.02));
    CHECK(mean_im / dn == doctest::Approx(0.0).epsilon(1.0).scale(0.02));
    CHECK(var_re / dn == doctest::Approx(2.0).epsilon(0.03));
    CHECK(var_im / dn == doctest::Approx(2.0).epsilon(0.03));
}

TEST_CASE("|h|^2 is exponential: Kolmogorov-Smirnov at the 1% level") {
    RandomStream s(31337, 0);
    const std::size_t n = 10000;
    std::vector<double> power(n);
    for (auto& p : power) {
        p = std::norm(s.next_complex_gaussian(1.0));
    }
    std::sort(power.begin(), power.end());
    double d_stat = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double cdf = 1.0 - std::exp(-power[i]);
        const double hi = static_cast<double>(i + 1) / n - cdf;
        const double lo = cdf - static_cast<double>(i) / n;
        d_stat = std::max({d_stat, hi, lo});
    }
    // 1% critical value for the two-sided KS statistic is ~1.628/sqrt(n).
    CHECK(d_stat < 1.628 / std::sqrt(static_cast<double>(n)));
}
