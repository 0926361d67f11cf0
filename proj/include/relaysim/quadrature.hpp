// SPDX-License-Identifier: Apache-2.0
#ifndef RELAYSIM_QUADRATURE_HPP
#define RELAYSIM_QUADRATURE_HPP

#include "relaysim/errors.hpp"

#include <cstddef>
#include <vector>

namespace relaysim {

/// Gauss-Legendre rule on [-1, 1]. Nodes are Legendre-polynomial roots found
/// by Newton iteration, so no tabulated constants are involved; an n-point
/// rule integrates polynomials up to degree 2n-1 exactly.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    static const GaussLegendreRule& order15();
    static const GaussLegendreRule& order30();

    static GaussLegendreRule make(int n);

    template <class F>
    double apply(F&& f, double a, double b) const {
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            sum += weights[i] * f(mid + half * nodes[i]);
        }
        return half * sum;
    }
};

/// Adaptive bisection with a 15/30-point Gauss-Legendre error estimate.
/// A panel is accepted when |GL30 - GL15| is below its share of `abs_tol`
/// or below `rel_tol` of the running integrand scale, whichever is looser;
/// running out of subdivisions raises NumericalError with the offending
/// interval in the message.
template <class F>
double integrate_adaptive(F&& f, double a, double b, double abs_tol = 1e-12,
                          double rel_tol = 1e-13) {
    const auto& coarse = GaussLegendreRule::order15();
    const auto& fine = GaussLegendreRule::order30();

    struct Panel {
        double a, b, tol;
        int depth;
    };
    std::vector<Panel> stack;
    stack.push_back({a, b, abs_tol, 0});
    double total = 0.0;
    double scale = 0.0;

    while (!stack.empty()) {
        const Panel p = stack.back();
        stack.pop_back();
        const double lo = coarse.apply(f, p.a, p.b);
        const double hi = fine.apply(f, p.a, p.b);
        const double err = hi > lo ? hi - lo : lo - hi;
        const double mag = hi > 0 ? hi : -hi;
        if (scale < mag) scale = mag;
        if (err <= p.tol || err <= rel_tol * scale) {
            total += hi;
            continue;
        }
        if (p.depth >= 48) {
            throw NumericalError("integrate_adaptive: no convergence on [" +
                                 std::to_string(p.a) + ", " + std::to_string(p.b) +
                                 "], estimate error " + std::to_string(err));
        }
        const double mid = 0.5 * (p.a + p.b);
        stack.push_back({p.a, mid, 0.5 * p.tol, p.depth + 1});
        stack.push_back({mid, p.b, 0.5 * p.tol, p.depth + 1});
    }
    return total;
}

} // namespace relaysim

#endif
