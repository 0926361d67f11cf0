// SPDX-License-Identifier: Apache-2.0
#include "relaysim/downlink.hpp"

#include <cmath>
#include <stdexcept>

namespace relaysim {

namespace {

constexpr double inv_sqrt2 = 0.70710678118654752440;

double norm_sq(const cvec& v) {
    double s = 0.0;
    for (const auto& z : v) s += std::norm(z);
    return s;
}

cplx dot_unconjugated(const cvec& a, const cvec& b) {
    cplx s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace

int maxmin_select(const DownlinkChannels& d) {
    const int n = d.antennas();
    int best = 0;
    double best_min = -1.0;
    for (int i = 0; i < n; ++i) {
        const double worse = std::min(std::abs(d.relay_to_a[i]), std::abs(d.relay_to_b[i]));
        if (worse > best_min) {
            best_min = worse;
            best = i;
        }
    }
    return best;
}

TbWeights tb_weights(const DownlinkChannels& d) {
    const double na = std::sqrt(norm_sq(d.relay_to_a));
    const double nb = std::sqrt(norm_sq(d.relay_to_b));
    if (na == 0.0 || nb == 0.0) {
        throw DegenerateChannelError("tb_weights: zero-norm downlink channel");
    }
    TbWeights w;
    w.toward_a.resize(d.antennas());
    w.toward_b.resize(d.antennas());
    for (int i = 0; i < d.antennas(); ++i) {
        w.toward_a[i] = std::conj(d.relay_to_a[i]) / na;
        w.toward_b[i] = std::conj(d.relay_to_b[i]) / nb;
    }
    return w;
}

cvec tb_precode(int sym_a, int sym_b, const DownlinkChannels& d, const Constellation& c,
                double power) {
    const TbWeights w = tb_weights(d);
    const double amp = std::sqrt(power);
    const cplx xa = amp * c.points[sym_a];
    const cplx xb = amp * c.points[sym_b];
    cvec tx(d.antennas());
    for (int i = 0; i < d.antennas(); ++i) {
        tx[i] = (w.toward_b[i] * xa + w.toward_a[i] * xb) * inv_sqrt2;
    }
    return tx;
}

int node_receive_tb(cplx received, const DownlinkChannels& d, int own_sym_a,
                    const Constellation& c, double power) {
    const TbWeights w = tb_weights(d);
    const double amp = std::sqrt(power);
    const cplx self_gain = dot_unconjugated(d.relay_to_a, w.toward_b);
    const cplx residual = received - self_gain * amp * c.points[own_sym_a] * inv_sqrt2;
    const double signal_amp = std::sqrt(norm_sq(d.relay_to_a)) * amp * inv_sqrt2;
    return detect_nearest(residual, c, signal_amp);
}

AlamoutiBlock alamouti_encode(cplx x1, cplx x2) {
    return AlamoutiBlock{{x1, x2}, {-std::conj(x2), std::conj(x1)}};
}

std::pair<cplx, cplx> alamouti_decode(std::span<const cplx, 2> received,
                                      std::span<const cplx, 2> gains) {
    const double gain_sq = std::norm(gains[0]) + std::norm(gains[1]);
    if (gain_sq == 0.0) {
        throw DegenerateChannelError("alamouti_decode: zero channel");
    }
    const cplx z1 = std::conj(gains[0]) * received[0] + gains[1] * std::conj(received[1]);
    const cplx z2 = std::conj(gains[1]) * received[0] - gains[0] * std::conj(received[1]);
    // Undo the combining gain ||h||^2 and the 1/sqrt(2) transmit scaling.
    const double scale = std::sqrt(2.0) / gain_sq;
    return {z1 * scale, z2 * scale};
}

double ostbc_effective_snr(std::span<const cplx> gains, double node_snr) {
    double gain_sq = 0.0;
    for (const auto& g : gains) gain_sq += std::norm(g);
    return gain_sq * node_snr / static_cast<double>(gains.size());
}

int node_receive_bnc(const BncObservation& obs, Scheme scheme, const DownlinkChannels& d,
                     int own_sym_a, const Constellation& c, double power) {
    if (scheme == Scheme::tb) {
        throw std::invalid_argument("node_receive_bnc: scheme is not network-coded");
    }
    const double amp = std::sqrt(power);
    int coded;
    if (scheme == Scheme::maxmin_as_bnc) {
        const int j = maxmin_select(d);
        coded = detect_nearest_coherent(obs.samples[0], c, d.relay_to_a[j] * amp);
    } else if (d.antennas() == 2 && obs.count == 2) {
        const std::array<cplx, 2> h = {d.relay_to_a[0], d.relay_to_a[1]};
        const auto [x1, x2] = alamouti_decode(std::span<const cplx, 2>(obs.samples),
                                              std::span<const cplx, 2>(h));
        coded = detect_nearest(x1, c, amp);
    } else {
        // Equivalent scalar channel of an N-antenna orthogonal STBC:
        // amplitude ||h_RA|| sqrt(P/N).
        double gain_sq = 0.0;
        for (const auto& g : d.relay_to_a) gain_sq += std::norm(g);
        const double signal_amp = std::sqrt(gain_sq * power / d.antennas());
        coded = detect_nearest(obs.samples[0], c, signal_amp);
    }
    return xor_decode(coded, own_sym_a, c);
}

} // namespace relaysim
