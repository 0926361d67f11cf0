// SPDX-License-Identifier: Apache-2.0
#ifndef RELAYSIM_ERRORS_HPP
#define RELAYSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace relaysim {

/// Zero-norm downlink channel handed to a beamformer. Probability-zero under
/// Rayleigh fading, so hitting one means the channel generator is broken;
/// surfaced instead of regularized.
struct DegenerateChannelError : std::runtime_error {
    explicit DegenerateChannelError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical routine failed to converge (e.g. quadrature out of subdivisions).
struct NumericalError : std::runtime_error {
    explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace relaysim

#endif
