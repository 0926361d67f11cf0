// SPDX-License-Identifier: Apache-2.0
#ifndef RELAYSIM_RANDOM_HPP
#define RELAYSIM_RANDOM_HPP

#include "relaysim/types.hpp"

#include <array>
#include <cstdint>
#include <span>

namespace relaysim {

/// Philox4x32-10 counter-based block cipher (Salmon et al.). One call maps a
/// 128-bit counter and 64-bit key to 128 pseudo-random bits, so any draw is
/// addressable by (key, counter) without sequential state.
std::array<uint32_t, 4> philox4x32(const std::array<uint32_t, 4>& counter,
                                   const std::array<uint32_t, 2>& key);

/// A reproducible random stream addressed by (master seed, stream index).
///
/// Every draw consumes exactly one Philox block whose counter is
/// (draw ordinal, stream index), keyed by the master seed. The whole draw
/// sequence is therefore a pure function of (seed, stream, ordinal):
/// copying a stream and replaying it yields bit-identical values, and
/// distinct stream indices give statistically independent sequences.
class RandomStream {
public:
    RandomStream(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream) {}

    uint64_t seed() const { return seed_; }
    uint64_t stream() const { return stream_; }
    uint64_t ordinal() const { return ordinal_; }

    /// Next 64 uniform bits.
    uint64_t next_u64();

    /// Uniform index in [0, m). Requires m a power of two (masking keeps the
    /// draw unbiased).
    uint32_t next_index(uint32_t m);

    /// One circularly symmetric complex Gaussian sample with E[|z|^2] =
    /// variance, via an exact Box-Muller transform (no CLT approximation).
    cplx next_complex_gaussian(double variance);

private:
    uint64_t seed_;
    uint64_t stream_;
    uint64_t ordinal_ = 0;
};

/// Fills `out` with i.i.d. circularly symmetric complex Gaussians, each
/// component (real, imag) zero-mean with variance `variance`/2.
/// Throws std::invalid_argument for negative variance.
void sample_complex_gaussian(std::span<cplx> out, double variance, RandomStream& stream);

/// Convenience allocating overload.
cvec sample_complex_gaussian(std::size_t n, double variance, RandomStream& stream);

} // namespace relaysim

#endif
