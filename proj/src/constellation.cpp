// SPDX-License-Identifier: Apache-2.0
#include "relaysim/constellation.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace relaysim {

double Constellation::g_mpsk() const {
    const double s = std::sin(std::numbers::pi / order);
    return s * s;
}

Constellation build_constellation(int order) {
    if (order < 2 || order > 64 || (order & (order - 1)) != 0) {
        throw std::invalid_argument("build_constellation: order must be a power of two in [2, 64], got " +
                                    std::to_string(order));
    }
    Constellation c;
    c.order = order;
    while ((1 << c.bits) < order) ++c.bits;
    c.points.resize(order);
    c.labels.resize(order);
    c.index_of_label.resize(order);
    for (int k = 0; k < order; ++k) {
        const double phase = 2.0 * std::numbers::pi * k / order;
        c.points[k] = {std::cos(phase), std::sin(phase)};
        c.labels[k] = static_cast<uint32_t>(k) ^ (static_cast<uint32_t>(k) >> 1);
        c.index_of_label[c.labels[k]] = static_cast<uint32_t>(k);
    }
    c.points[0] = {1.0, 0.0};
    return c;
}

int detect_nearest(cplx y, const Constellation& c, double amplitude) {
    int best = 0;
    double best_dist = std::norm(y - amplitude * c.points[0]);
    for (int k = 1; k < c.order; ++k) {
        const double dist = std::norm(y - amplitude * c.points[k]);
        if (dist < best_dist) {
            best_dist = dist;
            best = k;
        }
    }
    return best;
}

int detect_nearest_coherent(cplx y, const Constellation& c, cplx gain) {
    const double magnitude = std::abs(gain);
    if (magnitude == 0.0) {
        return detect_nearest(y, c, 0.0);
    }
    return detect_nearest(y * std::conj(gain) / magnitude, c, magnitude);
}

namespace {

void check_index(int k, const Constellation& c, const char* who) {
    if (k < 0 || k >= c.order) {
        throw std::invalid_argument(std::string(who) + ": symbol index out of range");
    }
}

} // namespace

int xor_combine(int a, int b, const Constellation& c) {
    check_index(a, c, "xor_combine");
    check_index(b, c, "xor_combine");
    return static_cast<int>(c.index_of_label[c.labels[a] ^ c.labels[b]]);
}

int xor_decode(int coded, int own, const Constellation& c) {
    check_index(coded, c, "xor_decode");
    check_index(own, c, "xor_decode");
    return static_cast<int>(c.index_of_label[c.labels[coded] ^ c.labels[own]]);
}

} // namespace relaysim
