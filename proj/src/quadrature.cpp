// SPDX-License-Identifier: Apache-2.0
#include "relaysim/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace relaysim {

GaussLegendreRule GaussLegendreRule::make(int n) {
    if (n < 1) {
        throw std::invalid_argument("GaussLegendreRule::make: order must be >= 1");
    }
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double deriv = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int k = 0; k < n; ++k) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
            }
            deriv = n * (x * p0 - p1) / (x * x - 1.0);
            const double step = p0 / deriv;
            x -= step;
            if (std::abs(step) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * deriv * deriv);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

const GaussLegendreRule& GaussLegendreRule::order15() {
    static const GaussLegendreRule rule = make(15);
    return rule;
}

const GaussLegendreRule& GaussLegendreRule::order30() {
    static const GaussLegendreRule rule = make(30);
    return rule;
}

} // namespace relaysim
