// SPDX-License-Identifier: Apache-2.0
#ifndef RELAYSIM_ANALYSIS_HPP
#define RELAYSIM_ANALYSIS_HPP

#include "relaysim/types.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace relaysim {

/// Parameters of a downlink SNR distribution: which scheme shapes it, how
/// many relay antennas, the per-entry channel mean power sigma0^2, and the
/// node SNR zeta_S = P / sigma_S^2 (linear).
struct MgfSpec {
    Scheme scheme = Scheme::tb;
    int antennas = 1;
    double channel_power = 1.0;
    double node_snr = 1.0;
};

/// Moment generating function E[exp(-t*gamma)] of the instantaneous downlink
/// SNR, closed form per scheme:
///   TB        (1 + t sigma0^2 zeta/2)^-N
///   STBC      (1 + t sigma0^2 zeta/N)^-N
///   Max-Min   N! / prod_{k=0}^{N-1} (k + 1 + t sigma0^2 zeta/2)
///             (conditioned on the selected antenna's coded-side channel
///              being the weaker of its pair)
/// mgf(spec, 0) = 1 for every scheme. Throws std::invalid_argument on t < 0.
double mgf(const MgfSpec& spec, double t);

/// The Max-Min MGF as the alternating binomial sum
///   sum_k C(N-1, k) N (-1)^k / (1 + k + t sigma0^2 zeta/2),
/// algebraically identical to the product form via partial fractions; kept
/// as an independent evaluation route for cross-checking.
double mgf_maxmin_sum_form(int antennas, double channel_power, double node_snr, double t);

/// Downlink SEP for coherent M-PSK via the MGF integral
///   (1/pi) * integral_0^{pi - pi/M} mgf(g / sin^2 theta) d theta,
/// g = sin^2(pi/M). For the Max-Min scheme this returns the half-prefactor
/// lower bound (the headline analytic value; the true SEP sits within a
/// factor of two above it).
double sep_downlink(const MgfSpec& spec, int order);

/// Both ends of the Max-Min sandwich: lower bound and its doubled upper
/// bound (the conditional SEP of the unfavorable antenna-selection state).
struct SepBounds {
    double lower = 0.0;
    double upper = 0.0;
};
SepBounds sep_downlink_maxmin_bounds(const MgfSpec& spec, int order);

/// End-to-end SEP from independent uplink and downlink error events:
/// p_u + p_d (1 - p_u). Inputs must be probabilities.
double total_sep(double p_uplink, double p_downlink);

/// High-SNR simplification p_u + p_d, clamped to 1.
double total_sep_simplified(double p_uplink, double p_downlink);

/// Asymptotic downlink SEP ratio of scheme `a` over scheme `b` as the node
/// SNR grows. Relative to Max-Min these are 2/N! (TB) and N^N / (2^(N-1) N!)
/// (STBC); other pairs follow by division. Factorials are evaluated in exact
/// integer arithmetic, which caps N at 20.
double asymptotic_ratio(Scheme a, Scheme b, int antennas);

/// Diversity order from the MGF high-SNR limit: the two-point slope of
/// -log mgf(g_MPSK) against log zeta_S between zeta_S = 1e6 and 1e8
/// (spec.node_snr is ignored). Equals the antenna count to within ~1e-5.
double diversity_order_analytic(const MgfSpec& spec, int order);

/// Least-squares slope of log10(SEP) against snr_db/10; the negated slope
/// estimates the diversity order. Points with sep <= 0 are dropped (noted in
/// `warnings` when given); fewer than two usable points is an error.
double diversity_slope_empirical(std::span<const std::pair<double, double>> points_db_sep,
                                 std::vector<std::string>* warnings = nullptr);

/// One row of a SEP-versus-SNR curve, pairing the analytic value with a
/// Monte Carlo estimate.
struct SepCurvePoint {
    double snr_db = 0.0;
    Scheme scheme = Scheme::tb;
    double sep_analytic = 0.0;
    double sep_simulated = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    int64_t trials = 0;
    int64_t errors = 0;
};

} // namespace relaysim

#endif
