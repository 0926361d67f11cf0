// SPDX-License-Identifier: Apache-2.0
#ifndef RELAYSIM_TYPES_HPP
#define RELAYSIM_TYPES_HPP

#include <complex>
#include <string>
#include <vector>

namespace relaysim {

using cplx = std::complex<double>;
using cvec = std::vector<cplx>;

/// Downlink broadcast scheme run by the relay in the second time slot.
enum class Scheme {
    tb,             // maximal ratio transmit beamforming (analog network coding)
    maxmin_as_bnc,  // max-min antenna selection, XOR network coding
    stbc_bnc,       // orthogonal space-time block code, XOR network coding
};

std::string to_string(Scheme s);

} // namespace relaysim

#endif
