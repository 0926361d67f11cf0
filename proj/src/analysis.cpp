// SPDX-License-Identifier: Apache-2.0
#include "relaysim/analysis.hpp"

#include "relaysim/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace relaysim {

namespace {

void check_spec(const MgfSpec& spec) {
    if (spec.antennas < 1) throw std::invalid_argument("MgfSpec: antennas must be >= 1");
    if (spec.channel_power <= 0.0) throw std::invalid_argument("MgfSpec: channel power must be positive");
    if (spec.node_snr <= 0.0) throw std::invalid_argument("MgfSpec: node SNR must be positive");
}

void check_order(int order) {
    if (order < 2 || order > 64 || (order & (order - 1)) != 0) {
        throw std::invalid_argument("analysis: modulation order must be a power of two in [2, 64]");
    }
}

double g_mpsk_of(int order) {
    const double s = std::sin(std::numbers::pi / order);
    return s * s;
}

unsigned long long factorial(int n) {
    if (n > 20) throw std::invalid_argument("factorial: n > 20 overflows exact integers");
    unsigned long long f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<unsigned long long>(k);
    return f;
}

// (1/pi) * integral_0^{pi - pi/M} mgf(g / sin^2) with the scheme's MGF.
double sep_integral(const MgfSpec& spec, int order) {
    const double g = g_mpsk_of(order);
    const double upper = std::numbers::pi * (1.0 - 1.0 / order);
    const double value = integrate_adaptive(
        [&](double theta) {
            const double s = std::sin(theta);
            return mgf(spec, g / (s * s));
        },
        0.0, upper);
    return value / std::numbers::pi;
}

} // namespace

double mgf(const MgfSpec& spec, double t) {
    check_spec(spec);
    if (t < 0.0) throw std::invalid_argument("mgf: t must be nonnegative");
    if (t == 0.0) return 1.0;
    const int n = spec.antennas;
    switch (spec.scheme) {
        case Scheme::tb:
            return std::pow(1.0 + t * spec.channel_power * spec.node_snr / 2.0, -n);
        case Scheme::stbc_bnc:
            return std::pow(1.0 + t * spec.channel_power * spec.node_snr / n, -n);
        case Scheme::maxmin_as_bnc: {
            const double shift = t * spec.channel_power * spec.node_snr / 2.0;
            double value = 1.0;
            for (int k = 0; k < n; ++k) {
                value *= (k + 1.0) / (k + 1.0 + shift);
            }
            return value;
        }
    }
    throw std::invalid_argument("mgf: unknown scheme");
}

double mgf_maxmin_sum_form(int antennas, double channel_power, double node_snr, double t) {
    if (antennas < 1) throw std::invalid_argument("mgf_maxmin_sum_form: antennas must be >= 1");
    if (t < 0.0) throw std::invalid_argument("mgf_maxmin_sum_form: t must be nonnegative");
    // The alternating sum cancels down to roughly N! / shift^N, wiping out
    // ~N log10(shift) leading digits, so it is accumulated in wider-than-
    // double arithmetic to keep the route meaningful as a cross-check.
#if defined(__SIZEOF_FLOAT128__)
    using wide = __float128;
#else
    using wide = long double;
#endif
    const wide shift = static_cast<wide>(t) * channel_power * node_snr / 2;
    wide sum = 0;
    wide binom = 1;  // C(N-1, k), updated multiplicatively
    for (int k = 0; k < antennas; ++k) {
        const wide term = binom * antennas / (1 + k + shift);
        sum += (k % 2 == 0) ? term : -term;
        binom = binom * (antennas - 1 - k) / (k + 1);
    }
    return static_cast<double>(sum);
}

double sep_downlink(const MgfSpec& spec, int order) {
    check_spec(spec);
    check_order(order);
    const double value = sep_integral(spec, order);
    return spec.scheme == Scheme::maxmin_as_bnc ? 0.5 * value : value;
}

SepBounds sep_downlink_maxmin_bounds(const MgfSpec& spec, int order) {
    check_spec(spec);
    check_order(order);
    if (spec.scheme != Scheme::maxmin_as_bnc) {
        throw std::invalid_argument("sep_downlink_maxmin_bounds: spec is not Max-Min");
    }
    const double conditional = sep_integral(spec, order);
    return {0.5 * conditional, conditional};
}

double total_sep(double p_uplink, double p_downlink) {
    if (p_uplink < 0.0 || p_uplink > 1.0 || p_downlink < 0.0 || p_downlink > 1.0) {
        throw std::invalid_argument("total_sep: inputs must lie in [0, 1]");
    }
    return p_uplink + p_downlink * (1.0 - p_uplink);
}

double total_sep_simplified(double p_uplink, double p_downlink) {
    if (p_uplink < 0.0 || p_uplink > 1.0 || p_downlink < 0.0 || p_downlink > 1.0) {
        throw std::invalid_argument("total_sep_simplified: inputs must lie in [0, 1]");
    }
    return std::min(1.0, p_uplink + p_downlink);
}

double asymptotic_ratio(Scheme a, Scheme b, int antennas) {
    if (antennas < 1) throw std::invalid_argument("asymptotic_ratio: antennas must be >= 1");
    if (antennas > 20) throw std::invalid_argument("asymptotic_ratio: antennas > 20 unsupported");
    const int n = antennas;
    // Each scheme's limit relative to Max-Min, in exact integer arithmetic.
    auto relative = [n](Scheme s) -> double {
        switch (s) {
            case Scheme::maxmin_as_bnc:
                return 1.0;
            case Scheme::tb:
                return 2.0 / static_cast<double>(factorial(n));
            case Scheme::stbc_bnc: {
                __int128 num = 1;
                for (int k = 0; k < n; ++k) num *= n;
                __int128 den = factorial(n);
                for (int k = 0; k < n - 1; ++k) den *= 2;
                return static_cast<double>(num) / static_cast<double>(den);
            }
        }
        throw std::invalid_argument("asymptotic_ratio: unknown scheme");
    };
    return relative(a) / relative(b);
}

double diversity_order_analytic(const MgfSpec& spec, int order) {
    check_order(order);
    const double g = g_mpsk_of(order);
    MgfSpec lo = spec, hi = spec;
    lo.node_snr = 1e6;
    hi.node_snr = 1e8;
    const double log_lo = std::log(mgf(lo, g));
    const double log_hi = std::log(mgf(hi, g));
    // Two-point slope of -log mgf vs log zeta; the O(1/log zeta) offset
    // cancels between the evaluation points.
    return (log_lo - log_hi) / (std::log(1e8) - std::log(1e6));
}

double diversity_slope_empirical(std::span<const std::pair<double, double>> points_db_sep,
                                 std::vector<std::string>* warnings) {
    std::vector<std::pair<double, double>> usable;
    usable.reserve(points_db_sep.size());
    for (const auto& [snr_db, sep] : points_db_sep) {
        if (sep <= 0.0) {
            if (warnings) {
                warnings->push_back("diversity_slope_empirical: dropped zero-SEP point at " +
                                    std::to_string(snr_db) + " dB");
            }
            continue;
        }
        usable.emplace_back(snr_db / 10.0, std::log10(sep));
    }
    if (usable.size() < 2) {
        throw std::invalid_argument("diversity_slope_empirical: need at least two positive-SEP points");
    }
    double mean_x = 0.0, mean_y = 0.0;
    for (const auto& [x, y] : usable) {
        mean_x += x;
        mean_y += y;
    }
    mean_x /= static_cast<double>(usable.size());
    mean_y /= static_cast<double>(usable.size());
    double sxx = 0.0, sxy = 0.0;
    for (const auto& [x, y] : usable) {
        sxx += (x - mean_x) * (x - mean_x);
        sxy += (x - mean_x) * (y - mean_y);
    }
    if (sxx == 0.0) {
        throw std::invalid_argument("diversity_slope_empirical: all points at the same SNR");
    }
    return sxy / sxx;
}

} // namespace relaysim
