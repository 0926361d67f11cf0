// SPDX-License-Identifier: Apache-2.0
#include "relaysim/analysis.hpp"

#include "relaysim/errors.hpp"
#include "relaysim/quadrature.hpp"
#include "relaysim/random.hpp"

#include <cmath>
#include <numbers>

#include <doctest.h>

using namespace relaysim;

TEST_CASE("gauss-legendre rules integrate polynomials exactly") {
    const auto rule = GaussLegendreRule::make(8);
    double weight_sum = 0.0;
    for (const double w : rule.weights) weight_sum += w;
    CHECK(weight_sum == doctest::Approx(2.0).epsilon(1e-14));

    // x^15 is the highest degree an 8-point rule must nail; odd powers are 0.
    const double i15 = rule.apply([](double x) { return std::pow(x, 15.0); }, -1.0, 1.0);
    CHECK(std::abs(i15) < 1e-14);
    const double i14 = rule.apply([](double x) { return std::pow(x, 14.0); }, -1.0, 1.0);
    CHECK(i14 == doctest::Approx(2.0 / 15.0).epsilon(1e-13));
}

TEST_CASE("adaptive integration hits analytic references") {
    const double s = integrate_adaptive([](double x) { return std::sin(x); }, 0.0,
                                        std::numbers::pi);
    CHECK(s == doctest::Approx(2.0).epsilon(1e-13));

    const double peaked =
        integrate_adaptive([](double x) { return 1.0 / (1.0 + 100.0 * x * x); }, 0.0, 1.0);
    CHECK(peaked == doctest::Approx(std::atan(10.0) / 10.0).epsilon(1e-12));
}

TEST_CASE("mgf is 1 at t=0 and strictly decreasing for every scheme") {
    RandomStream s(111, 0);
    for (const Scheme scheme : {Scheme::tb, Scheme::maxmin_as_bnc, Scheme::stbc_bnc}) {
        for (int n = 1; n <= 6; ++n) {
            const double snr = 0.5 + 50.0 * static_cast<double>(s.next_u64() >> 11) * 0x1.0p-53;
            const MgfSpec spec{scheme, n, 1.0, snr};
            CHECK(mgf(spec, 0.0) == 1.0);
            double prev = 1.0;
            for (double t = 0.25; t <= 8.0; t *= 2.0) {
                const double value = mgf(spec, t);
                CHECK(value < prev);
                CHECK(value > 0.0);
                prev = value;
            }
        }
    }
}

TEST_CASE("tb mgf at unit shift is 2^-N") {
    for (int n = 1; n <= 6; ++n) {
        const MgfSpec spec{Scheme::tb, n, 1.0, 4.0};  // t * sigma0^2 * zeta / 2 = 1 at t = 0.5
        CHECK(mgf(spec, 0.5) == doctest::Approx(std::pow(2.0, -n)).epsilon(1e-14));
    }
}

TEST_CASE("mgf rejects negative t") {
    const MgfSpec spec{Scheme::tb, 2, 1.0, 1.0};
    CHECK_THROWS_AS(mgf(spec, -0.1), std::invalid_argument);
}

TEST_CASE("maxmin mgf: sum form equals product form") {
    RandomStream s(222, 0);
    for (int i = 0; i < 1000; ++i) {
        const int n = 1 + static_cast<int>(s.next_index(8));
        const double t = 100.0 * static_cast<double>(s.next_u64() >> 11) * 0x1.0p-53;
        const MgfSpec spec{Scheme::maxmin_as_bnc, n, 1.0, 2.0};
        const double product = mgf(spec, t);
        const double sum = mgf_maxmin_sum_form(n, 1.0, 2.0, t);
        CHECK(std::abs(product - sum) / product < 1e-10);
    }
}

TEST_CASE("sep at vanishing SNR approaches the random-guess rate") {
    for (const Scheme scheme : {Scheme::tb, Scheme::stbc_bnc}) {
        const MgfSpec spec{scheme, 2, 1.0, 1e-6};  // -60 dB
        const double sep = sep_downlink(spec, 4);
        CHECK(sep >= 0.74);
        CHECK(sep <= 0.75);
    }
}

TEST_CASE("rayleigh BPSK closed form: single-antenna TB at mean SNR 10") {
    // gamma ~ Exp(mean 10): SEP = (1 - sqrt(gbar/(1+gbar)))/2, an independent
    // textbook identity evaluated here directly.
    const double gbar = 10.0;
    const double closed_form = 0.5 * (1.0 - std::sqrt(gbar / (1.0 + gbar)));
    const MgfSpec spec{Scheme::tb, 1, 1.0, 20.0};  // sigma0^2 * zeta / 2 = 10
    const double sep = sep_downlink(spec, 2);
    CHECK(sep == doctest::Approx(closed_form).epsilon(1e-10));
    CHECK(sep == doctest::Approx(2.3265e-2).epsilon(1e-4));
}

TEST_CASE("single-antenna stbc equals tb at half the node SNR") {
    // The two conventions divide by N and by 2 respectively, so at N=1 the
    // STBC curve is the TB curve with zeta halved.
    const MgfSpec stbc{Scheme::stbc_bnc, 1, 1.0, 10.0};
    const MgfSpec tb{Scheme::tb, 1, 1.0, 20.0};
    for (double t : {0.1, 0.7, 3.0}) {
        CHECK(mgf(stbc, t) == doctest::Approx(mgf(tb, t)).epsilon(1e-14));
    }
    CHECK(sep_downlink(stbc, 4) == doctest::Approx(sep_downlink(tb, 4)).epsilon(1e-12));
}

TEST_CASE("maxmin bounds sandwich: upper is exactly twice the lower") {
    const MgfSpec spec{Scheme::maxmin_as_bnc, 3, 1.0, 31.62};
    const SepBounds bounds = sep_downlink_maxmin_bounds(spec, 4);
    CHECK(bounds.upper == doctest::Approx(2.0 * bounds.lower).epsilon(1e-14));
    CHECK(sep_downlink(spec, 4) == doctest::Approx(bounds.lower).epsilon(1e-14));
}

TEST_CASE("sep_downlink decreases in SNR and stays in (0, (M-1)/M]") {
    for (const Scheme scheme : {Scheme::tb, Scheme::maxmin_as_bnc, Scheme::stbc_bnc}) {
        double prev = 1.0;
        for (double snr_db = -10.0; snr_db <= 40.0; snr_db += 5.0) {
            const MgfSpec spec{scheme, 2, 1.0, std::pow(10.0, snr_db / 10.0)};
            const double sep = sep_downlink(spec, 4);
            CHECK(sep > 0.0);
            CHECK(sep <= 0.75);
            CHECK(sep < prev);
            prev = sep;
        }
    }
}

TEST_CASE("total sep combiners") {
    CHECK(total_sep(0.0, 0.37) == doctest::Approx(0.37));
    CHECK(total_sep(0.5, 0.5) == doctest::Approx(0.75));
    CHECK(total_sep_simplified(0.9, 0.9) == 1.0);
    for (double pu = 0.0; pu <= 1.0; pu += 0.25) {
        for (double pd = 0.0; pd <= 1.0; pd += 0.25) {
            const double exact = total_sep(pu, pd);
            const double simplified = std::min(1.0, pu + pd);
            CHECK(simplified - exact == doctest::Approx(std::min(1.0, pu + pd) - pu - pd + pu * pd)
                                            .epsilon(1e-12));
        }
    }
    CHECK_THROWS_AS(total_sep(-0.1, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(total_sep(0.1, 1.5), std::invalid_argument);
}

TEST_CASE("asymptotic ratios match the closed forms") {
    // N=2: every scheme shares the same asymptotic downlink SEP.
    CHECK(asymptotic_ratio(Scheme::tb, Scheme::maxmin_as_bnc, 2) == doctest::Approx(1.0));
    CHECK(asymptotic_ratio(Scheme::stbc_bnc, Scheme::maxmin_as_bnc, 2) == doctest::Approx(1.0));
    // 2/3! = 1/3
    CHECK(asymptotic_ratio(Scheme::tb, Scheme::maxmin_as_bnc, 3) == doctest::Approx(1.0 / 3.0));
    // 4^4/(2^3 4!) = 256/192 = 4/3
    CHECK(asymptotic_ratio(Scheme::stbc_bnc, Scheme::maxmin_as_bnc, 4) ==
          doctest::Approx(4.0 / 3.0));
    // Quotient consistency: (a/c) = (a/b)(b/c).
    const double ab = asymptotic_ratio(Scheme::tb, Scheme::stbc_bnc, 3);
    CHECK(ab == doctest::Approx(asymptotic_ratio(Scheme::tb, Scheme::maxmin_as_bnc, 3) /
                                asymptotic_ratio(Scheme::stbc_bnc, Scheme::maxmin_as_bnc, 3)));
    CHECK(ab == doctest::Approx(8.0 / 27.0));
    CHECK_THROWS_AS(asymptotic_ratio(Scheme::tb, Scheme::stbc_bnc, 0), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_ratio(Scheme::tb, Scheme::stbc_bnc, 21), std::invalid_argument);
}

TEST_CASE("analytic diversity order recovers N for every scheme") {
    for (const Scheme scheme : {Scheme::tb, Scheme::maxmin_as_bnc, Scheme::stbc_bnc}) {
        for (int n = 1; n <= 4; ++n) {
            const MgfSpec spec{scheme, n, 1.0, 1.0};
            CHECK(diversity_order_analytic(spec, 4) == doctest::Approx(n).epsilon(0.05));
        }
    }
    const MgfSpec bpsk{Scheme::maxmin_as_bnc, 1, 1.0, 1.0};
    CHECK(diversity_order_analytic(bpsk, 2) == doctest::Approx(1.0).epsilon(0.05));
}

TEST_CASE("empirical slope on synthetic power-law data is exact") {
    std::vector<std::pair<double, double>> points;
    for (double db = 10.0; db <= 30.0; db += 5.0) {
        const double snr = std::pow(10.0, db / 10.0);
        points.emplace_back(db, 0.8 * std::pow(snr, -3.0));
    }
    CHECK(diversity_slope_empirical(points) == doctest::Approx(-3.0).epsilon(1e-12));
}

TEST_CASE("empirical slope rejects degenerate inputs and skips zero points") {
    std::vector<std::pair<double, double>> one = {{10.0, 1e-3}};
    CHECK_THROWS_AS(diversity_slope_empirical(one), std::invalid_argument);

    std::vector<std::pair<double, double>> with_zero = {{10.0, 1e-2}, {20.0, 0.0}, {30.0, 1e-4}};
    std::vector<std::string> warnings;
    const double slope = diversity_slope_empirical(with_zero, &warnings);
    CHECK(warnings.size() == 1);
    CHECK(slope == doctest::Approx(-1.0).epsilon(1e-9));

    std::vector<std::pair<double, double>> all_zero = {{10.0, 0.0}, {20.0, 0.0}};
    CHECK_THROWS_AS(diversity_slope_empirical(all_zero), std::invalid_argument);
}

TEST_CASE("tb analytic slope between 20 and 30 dB at N=2 is about 2") {
    std::vector<std::pair<double, double>> points;
    for (double db = 20.0; db <= 30.0; db += 2.0) {
        const MgfSpec spec{Scheme::tb, 2, 1.0, std::pow(10.0, db / 10.0)};
        points.emplace_back(db, sep_downlink(spec, 4));
    }
    CHECK(-diversity_slope_empirical(points) == doctest::Approx(2.0).epsilon(0.05));
}

TEST_CASE("analytic high-SNR slope equals N within 0.1 for N <= 4") {
    for (const Scheme scheme : {Scheme::tb, Scheme::maxmin_as_bnc, Scheme::stbc_bnc}) {
        for (int n = 1; n <= 4; ++n) {
            std::vector<std::pair<double, double>> points;
            for (double db = 40.0; db <= 50.0; db += 2.5) {
                const MgfSpec spec{scheme, n, 1.0, std::pow(10.0, db / 10.0)};
                points.emplace_back(db, sep_downlink(spec, 4));
            }
            CHECK(-diversity_slope_empirical(points) == doctest::Approx(n).epsilon(0.1 / n));
        }
    }
}

TEST_CASE("the three schemes coincide asymptotically at N=2") {
    const double snr = std::pow(10.0, 6.0);  // 60 dB
    const MgfSpec tb{Scheme::tb, 2, 1.0, snr};
    const MgfSpec mm{Scheme::maxmin_as_bnc, 2, 1.0, snr};
    const MgfSpec st{Scheme::stbc_bnc, 2, 1.0, snr};
    const double sep_tb = sep_downlink(tb, 4);
    const double sep_mm = sep_downlink(mm, 4);
    const double sep_st = sep_downlink(st, 4);
    CHECK(sep_tb / sep_mm == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(sep_st / sep_mm == doctest::Approx(1.0).epsilon(1e-3));
}
