// SPDX-License-Identifier: Apache-2.0
#include "relaysim/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace relaysim {

namespace {

inline void mulhilo(uint32_t a, uint32_t b, uint32_t& hi, uint32_t& lo) {
    const uint64_t p = static_cast<uint64_t>(a) * b;
    hi = static_cast<uint32_t>(p >> 32);
    lo = static_cast<uint32_t>(p);
}

// Uniform double in (0, 1]: 53 high bits, shifted off zero so log() is safe.
inline double uniform_open(uint64_t bits) {
    return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

// Uniform double in [0, 1).
inline double uniform_half_open(uint64_t bits) {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

} // namespace

std::array<uint32_t, 4> philox4x32(const std::array<uint32_t, 4>& counter,
                                   const std::array<uint32_t, 2>& key) {
    constexpr uint32_t mul0 = 0xD2511F53u, mul1 = 0xCD9E8D57u;
    constexpr uint32_t weyl0 = 0x9E3779B9u, weyl1 = 0xBB67AE85u;

    std::array<uint32_t, 4> x = counter;
    std::array<uint32_t, 2> k = key;
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            k[0] += weyl0;
            k[1] += weyl1;
        }
        uint32_t hi0, lo0, hi1, lo1;
        mulhilo(mul0, x[0], hi0, lo0);
        mulhilo(mul1, x[2], hi1, lo1);
        x = {hi1 ^ x[1] ^ k[0], lo1, hi0 ^ x[3] ^ k[1], lo0};
    }
    return x;
}

uint64_t RandomStream::next_u64() {
    const std::array<uint32_t, 4> ctr = {
        static_cast<uint32_t>(ordinal_),
        static_cast<uint32_t>(ordinal_ >> 32),
        static_cast<uint32_t>(stream_),
        static_cast<uint32_t>(stream_ >> 32),
    };
    const std::array<uint32_t, 2> key = {
        static_cast<uint32_t>(seed_),
        static_cast<uint32_t>(seed_ >> 32),
    };
    const auto block = philox4x32(ctr, key);
    ++ordinal_;
    return (static_cast<uint64_t>(block[1]) << 32) | block[0];
}

uint32_t RandomStream::next_index(uint32_t m) {
    if (m == 0 || (m & (m - 1)) != 0) {
        throw std::invalid_argument("RandomStream::next_index: m must be a power of two");
    }
    return static_cast<uint32_t>(next_u64() & (m - 1));
}

cplx RandomStream::next_complex_gaussian(double variance) {
    if (variance < 0.0) {
        throw std::invalid_argument("next_complex_gaussian: negative variance");
    }
    // One block feeds both Box-Muller uniforms.
    const std::array<uint32_t, 4> ctr = {
        static_cast<uint32_t>(ordinal_),
        static_cast<uint32_t>(ordinal_ >> 32),
        static_cast<uint32_t>(stream_),
        static_cast<uint32_t>(stream_ >> 32),
    };
    const std::array<uint32_t, 2> key = {
        static_cast<uint32_t>(seed_),
        static_cast<uint32_t>(seed_ >> 32),
    };
    const auto block = philox4x32(ctr, key);
    ++ordinal_;

    const uint64_t b0 = (static_cast<uint64_t>(block[1]) << 32) | block[0];
    const uint64_t b1 = (static_cast<uint64_t>(block[3]) << 32) | block[2];
    const double u1 = uniform_open(b0);
    const double u2 = uniform_half_open(b1);
    const double radius = std::sqrt(-std::log(u1) * variance);
    const double angle = 2.0 * std::numbers::pi * u2;
    // radius^2 ~ Exp(mean = variance), so E[|z|^2] = variance with each
    // component N(0, variance/2).
    return {radius * std::cos(angle), radius * std::sin(angle)};
}

void sample_complex_gaussian(std::span<cplx> out, double variance, RandomStream& stream) {
    if (variance < 0.0) {
        throw std::invalid_argument("sample_complex_gaussian: negative variance");
    }
    for (auto& z : out) {
        z = stream.next_complex_gaussian(variance);
    }
}

cvec sample_complex_gaussian(std::size_t n, double variance, RandomStream& stream) {
    cvec out(n);
    sample_complex_gaussian(std::span<cplx>(out), variance, stream);
    return out;
}

} // namespace relaysim
