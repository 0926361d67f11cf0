// SPDX-License-Identifier: Apache-2.0
#ifndef RELAYSIM_DOWNLINK_HPP
#define RELAYSIM_DOWNLINK_HPP

#include "relaysim/channel.hpp"
#include "relaysim/constellation.hpp"
#include "relaysim/errors.hpp"
#include "relaysim/types.hpp"

#include <array>
#include <utility>

namespace relaysim {

/// Antenna index (0-based) maximizing min(|h_iA|, |h_iB|): the relay keeps
/// the antenna whose worse downlink channel is best. Ties go to the smallest
/// index.
int maxmin_select(const DownlinkChannels& d);

/// Unit-norm maximal-ratio transmit weights conj(h)/||h|| for the two
/// downlink channel vectors. Throws DegenerateChannelError on a zero-norm
/// channel.
struct TbWeights {
    cvec toward_a;  // v_A
    cvec toward_b;  // v_B
};
TbWeights tb_weights(const DownlinkChannels& d);

/// Relay transmit vector for the beamforming scheme:
/// s_R = (v_B * x_A + v_A * x_B) / sqrt(2) with x = sqrt(P) * point.
/// The 1/sqrt(2) keeps E over symbols of ||s_R||^2 equal to P exactly.
cvec tb_precode(int sym_a, int sym_b, const DownlinkChannels& d, const Constellation& c,
                double power);

/// Node A's receive chain for the beamforming scheme: subtracts the
/// component carrying its own symbol (h_RA^T v_B x_A / sqrt(2)), then
/// detects the residual at effective amplitude ||h_RA|| sqrt(P) / sqrt(2).
int node_receive_tb(cplx received, const DownlinkChannels& d, int own_sym_a,
                    const Constellation& c, double power);

/// Alamouti code matrix for two symbols, one column per slot:
/// slot 0 transmits (x1, x2), slot 1 transmits (-conj(x2), conj(x1)).
struct AlamoutiBlock {
    std::array<cplx, 2> slot0;
    std::array<cplx, 2> slot1;
};
AlamoutiBlock alamouti_encode(cplx x1, cplx x2);

/// Orthogonal combining of a two-slot Alamouti reception (1/sqrt(2) transmit
/// scaling assumed). Returns equalized symbol estimates (x1, x2): exact under
/// zero noise, per-symbol effective SNR ||h||^2 * P / (2 sigma^2) otherwise.
std::pair<cplx, cplx> alamouti_decode(std::span<const cplx, 2> received,
                                      std::span<const cplx, 2> gains);

/// Post-combining SNR of an N-antenna orthogonal STBC downlink:
/// ||h||^2 * node_snr / N.
double ostbc_effective_snr(std::span<const cplx> gains, double node_snr);

/// What node A observes in one BNC downlink use: a single sample for
/// Max-Min / the N != 2 STBC equivalent-SNR model, or two slots for
/// explicit Alamouti.
struct BncObservation {
    std::array<cplx, 2> samples{};
    int count = 1;
};

/// Node A's receive chain for the XOR-coded schemes: detect the coded symbol
/// through the scheme's effective channel, then strip the node's own symbol.
int node_receive_bnc(const BncObservation& obs, Scheme scheme, const DownlinkChannels& d,
                     int own_sym_a, const Constellation& c, double power);

} // namespace relaysim

#endif
