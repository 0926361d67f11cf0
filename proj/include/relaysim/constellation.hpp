// SPDX-License-Identifier: Apache-2.0
#ifndef RELAYSIM_CONSTELLATION_HPP
#define RELAYSIM_CONSTELLATION_HPP

#include "relaysim/types.hpp"

#include <cstdint>
#include <vector>

namespace relaysim {

/// M-PSK constellation with binary-reflected Gray bit labels.
///
/// Point k sits at exp(i*2*pi*k/M) on the unit circle; label k = k ^ (k >> 1),
/// so cyclically adjacent points differ in exactly one bit. Power-of-two M
/// keeps the label set closed under bitwise XOR, which is what makes the
/// network-coding combine/decode below well defined.
struct Constellation {
    int order = 0;                         // M
    int bits = 0;                          // log2(M)
    cvec points;                           // unit-magnitude, point 0 = 1+0i
    std::vector<uint32_t> labels;          // Gray label per point index
    std::vector<uint32_t> index_of_label;  // inverse map

    /// sin^2(pi/M), the M-PSK SEP integral constant.
    double g_mpsk() const;
};

/// Builds the M-PSK constellation. M must be a power of two in [2, 64].
Constellation build_constellation(int order);

/// Coherent nearest-point detection: argmin_k |y - amplitude * points[k]|,
/// ties broken toward the smallest index. `amplitude` is the effective
/// (real, nonnegative) symbol scale seen by the detector.
int detect_nearest(cplx y, const Constellation& c, double amplitude);

/// As detect_nearest, but against a complex effective gain: the observation
/// is derotated by the gain's phase first, which preserves all distances.
int detect_nearest_coherent(cplx y, const Constellation& c, cplx gain);

/// Index whose label is labels[a] XOR labels[b] (the relay's network-coding
/// combine). Throws std::invalid_argument on out-of-range indices.
int xor_combine(int a, int b, const Constellation& c);

/// Removes a node's own symbol from a network-coded one. XOR is self-inverse,
/// so this is the same map as xor_combine.
int xor_decode(int coded, int own, const Constellation& c);

} // namespace relaysim

#endif
