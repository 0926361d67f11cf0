// SPDX-License-Identifier: Apache-2.0
#include "relaysim/verify.hpp"

#include "relaysim/downlink.hpp"
#include "relaysim/engine.hpp"
#include "relaysim/errors.hpp"
#include "relaysim/output.hpp"
#include "relaysim/random.hpp"
#include "relaysim/stats.hpp"
#include "relaysim/uplink.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace relaysim {

namespace {

struct CriterionResult {
    bool pass = false;
    std::vector<std::string> details;
};

std::string fmt(double v) {
    return format_double(v);
}

// Interpolated SNR (dB) at which a simulated curve crosses `target` SEP,
// linear in log10(SEP) between bracketing grid points.
double snr_at_sep(const std::vector<SepCurvePoint>& rows, double target) {
    for (std::size_t i = 1; i < rows.size(); ++i) {
        const double hi = rows[i - 1].sep_simulated;
        const double lo = rows[i].sep_simulated;
        if (hi >= target && lo <= target && hi > 0.0 && lo > 0.0) {
            const double lh = std::log10(hi), ll = std::log10(lo), lt = std::log10(target);
            const double frac = (lh - lt) / (lh - ll);
            return rows[i - 1].snr_db + frac * (rows[i].snr_db - rows[i - 1].snr_db);
        }
    }
    throw NumericalError("snr_at_sep: curve does not bracket the target SEP");
}

std::vector<double> make_grid(double lo, double hi, double step) {
    std::vector<double> grid;
    const int count = static_cast<int>((hi - lo) / step + 1e-9) + 1;
    for (int i = 0; i < count; ++i) grid.push_back(lo + i * step);
    return grid;
}

// ---- criterion 1: full downlink diversity of Max-Min AS-BNC -------------

CriterionResult criterion_diversity_maxmin(const VerifyOptions& o) {
    struct Setup {
        int antennas;
        double lo, hi, step;
        int64_t trials;
    };
    // Grids span roughly the deepest order-of-magnitude of SEP that still
    // collects >= 100 errors per point at the stated trial count.
    const std::vector<Setup> setups = o.quick
        ? std::vector<Setup>{{1, 20, 30, 2.0, 200000},
                             {2, 16, 20, 1.0, 200000},
                             {3, 14, 17, 0.75, 200000},
                             {4, 9.5, 12.5, 0.75, 200000}}
        : std::vector<Setup>{{1, 24, 34, 2.0, 2000000},
                             {2, 21.5, 26.5, 1.0, 4000000},
                             {3, 17.5, 22, 0.9, 10000000},
                             {4, 16, 19, 0.6, 10000000}};
    const double tol = o.quick ? 0.85 : 0.3;

    CriterionResult r;
    r.pass = true;
    r.details.push_back(std::string("downlink_only, QPSK; fit over the last SEP decade of ") +
                        "points with >= 100 errors; tolerance " + fmt(tol) +
                        (o.quick ? " (quick mode: shallow grids, widened tolerance)" : ""));
    for (const auto& s : setups) {
        SimConfig cfg;
        cfg.scheme = Scheme::maxmin_as_bnc;
        cfg.mode = Mode::downlink_only;
        cfg.antennas = s.antennas;
        cfg.order = 4;
        cfg.trials = s.trials;
        cfg.seed = 1;
        const auto rows = sweep(cfg, make_grid(s.lo, s.hi, s.step));

        double min_sep = 1.0;
        for (const auto& row : rows) {
            if (row.errors >= 100 && row.sep_simulated < min_sep) min_sep = row.sep_simulated;
        }
        std::vector<std::pair<double, double>> usable;
        for (const auto& row : rows) {
            if (row.errors >= 100 && row.sep_simulated <= 10.0 * min_sep) {
                usable.emplace_back(row.snr_db, row.sep_simulated);
            }
        }
        if (usable.size() < 3) {
            r.pass = false;
            r.details.push_back("N=" + std::to_string(s.antennas) +
                                ": fewer than 3 points with >= 100 errors");
            continue;
        }
        const double slope = -diversity_slope_empirical(usable);
        const bool ok = std::abs(slope - s.antennas) <= tol;
        r.pass = r.pass && ok;
        r.details.push_back("N=" + std::to_string(s.antennas) + ": fitted order " + fmt(slope) +
                            " from " + std::to_string(usable.size()) + " points, " +
                            std::to_string(cfg.trials) + " trials each" +
                            (ok ? "" : "  <-- out of tolerance"));
        if (!ok && s.antennas == 4 && !o.quick) {
            r.details.push_back("      note: at the 1e7-trial measurability floor (SEP ~1e-5) the");
            r.details.push_back("      N=4 curve's local slope is 3.5; slopes above 3.7 only emerge");
            r.details.push_back("      below SEP ~5e-7 (>1e9 trials/point). The asymptotic order 4");
            r.details.push_back("      itself is confirmed by the MGF limit in criterion 6.");
        }
    }
    return r;
}

// ---- criterion 2: analytic vs simulation, N=2 QPSK ----------------------

CriterionResult criterion_analytic_agreement(const VerifyOptions& o) {
    const int64_t trials = o.quick ? 200000 : 2000000;
    const double tight_factor = o.quick ? 1.30 : 1.15;
    // Quick mode trades the 95% interval for 99.9% so one-in-twenty coverage
    // misses do not dominate a smoke run.
    const double z = o.quick ? 3.2905 : 1.959963984540054;
    const auto grid = make_grid(5, 25, 5);

    CriterionResult r;
    r.pass = true;
    r.details.push_back("downlink_only, N=2, QPSK, 5-25 dB, " + std::to_string(trials) +
                        " trials/point" +
                        (o.quick ? ", quick mode: 99.9% intervals, tight-bound factor " +
                                       fmt(tight_factor)
                                 : ""));

    for (const Scheme scheme : {Scheme::tb, Scheme::stbc_bnc}) {
        SimConfig cfg;
        cfg.scheme = scheme;
        cfg.mode = Mode::downlink_only;
        cfg.antennas = 2;
        cfg.order = 4;
        cfg.trials = trials;
        cfg.seed = 2;
        for (const auto& row : sweep(cfg, grid)) {
            const auto [lo, hi] = wilson_interval(row.errors, row.trials, z);
            const bool ok = lo <= row.sep_analytic && row.sep_analytic <= hi;
            r.pass = r.pass && ok;
            if (!ok) {
                r.details.push_back(to_string(scheme) + " @ " + fmt(row.snr_db) +
                                    " dB: analytic " + fmt(row.sep_analytic) + " outside CI [" +
                                    fmt(lo) + ", " + fmt(hi) + "]");
            }
        }
        r.details.push_back(to_string(scheme) + ": analytic inside every interval");
    }

    SimConfig cfg;
    cfg.scheme = Scheme::maxmin_as_bnc;
    cfg.mode = Mode::downlink_only;
    cfg.antennas = 2;
    cfg.order = 4;
    cfg.trials = trials;
    cfg.seed = 2;
    for (const auto& row : sweep(cfg, grid)) {
        const MgfSpec spec{Scheme::maxmin_as_bnc, 2, 1.0, std::pow(10.0, row.snr_db / 10.0)};
        const SepBounds bounds = sep_downlink_maxmin_bounds(spec, 4);
        // Monte Carlo rendering of the bracket: the 95% CI must intersect it.
        double upper = bounds.upper;
        if (row.snr_db >= 20.0 - 1e-9) upper = tight_factor * bounds.lower;
        const bool ok = row.ci_high >= bounds.lower && row.ci_low <= upper;
        r.pass = r.pass && ok;
        r.details.push_back("maxmin @ " + fmt(row.snr_db) + " dB: sim " + fmt(row.sep_simulated) +
                            " (CI [" + fmt(row.ci_low) + ", " + fmt(row.ci_high) +
                            "]) vs bracket [" + fmt(bounds.lower) + ", " + fmt(upper) + "]" +
                            (ok ? "" : "  <-- outside"));
    }
    return r;
}

// ---- criterion 3: TB's 0.5 dB advantage end to end ----------------------

CriterionResult criterion_tb_advantage(const VerifyOptions& o) {
    const int64_t trials = o.quick ? 500000 : 6000000;
    const double gap_tol = 0.3;
    const double bnc_tol = o.quick ? 0.3 : 0.2;
    const auto grid = make_grid(14, 22, 1);

    CriterionResult r;
    r.details.push_back("end_to_end, N=2, QPSK, one SNR driving both hops; gaps at SEP = 1e-3" +
                        std::string(o.quick ? " (quick mode: fewer trials)" : ""));
    std::vector<double> crossings;
    for (const Scheme scheme : {Scheme::tb, Scheme::maxmin_as_bnc, Scheme::stbc_bnc}) {
        SimConfig cfg;
        cfg.scheme = scheme;
        cfg.mode = Mode::end_to_end;
        cfg.antennas = 2;
        cfg.order = 4;
        cfg.trials = trials;
        cfg.seed = 3;
        cfg.max_errors = o.quick ? 20000 : 60000;
        cfg.bound_realizations = 20000;  // analytic column is not used below
        const auto rows = sweep(cfg, grid);
        crossings.push_back(snr_at_sep(rows, 1e-3));
        r.details.push_back(to_string(scheme) + ": SEP=1e-3 at " + fmt(crossings.back()) + " dB");
    }
    const double tb_gap = crossings[1] - crossings[0];
    const double bnc_gap = std::abs(crossings[1] - crossings[2]);
    const bool gap_ok = std::abs(tb_gap - 0.5) <= gap_tol;
    const bool bnc_ok = bnc_gap <= bnc_tol;
    r.details.push_back("TB advantage over Max-Min: " + fmt(tb_gap) + " dB (want 0.5 +/- " +
                        fmt(gap_tol) + ")" + (gap_ok ? "" : "  <-- out of tolerance"));
    if (!gap_ok) {
        r.details.push_back("      note: with one SNR driving both hops, relay ML errors on the");
        r.details.push_back("      two symbols are strongly correlated (P_xor/P_marginal ~ 1.3),");
        r.details.push_back("      capping the measurable gap near 0.17 dB; pinning the downlink");
        r.details.push_back("      SNR and sweeping the uplink instead yields 0.8 dB. Neither");
        r.details.push_back("      convention lands in the required window.");
    }
    r.details.push_back("Max-Min vs Alamouti gap: " + fmt(bnc_gap) + " dB (want <= " +
                        fmt(bnc_tol) + ")" + (bnc_ok ? "" : "  <-- out of tolerance"));
    r.pass = gap_ok && bnc_ok;
    return r;
}

// ---- criterion 4: asymptotic SEP ratios ----------------------------------

CriterionResult criterion_asymptotic_ratios(const VerifyOptions&) {
    CriterionResult r;
    r.pass = true;
    r.details.push_back("analytic downlink SEP ratios at 70 dB vs closed-form limits, 5% relative");
    const double snr = std::pow(10.0, 7.0);
    for (const int n : {2, 3, 4}) {
        const MgfSpec tb{Scheme::tb, n, 1.0, snr};
        const MgfSpec mm{Scheme::maxmin_as_bnc, n, 1.0, snr};
        const MgfSpec st{Scheme::stbc_bnc, n, 1.0, snr};
        const double sep_tb = sep_downlink(tb, 4);
        const double sep_mm = sep_downlink(mm, 4);
        const double sep_st = sep_downlink(st, 4);

        const double want_tb = asymptotic_ratio(Scheme::tb, Scheme::maxmin_as_bnc, n);
        const double want_st = asymptotic_ratio(Scheme::stbc_bnc, Scheme::maxmin_as_bnc, n);
        const double got_tb = sep_tb / sep_mm;
        const double got_st = sep_st / sep_mm;
        const bool ok_tb = std::abs(got_tb / want_tb - 1.0) <= 0.05;
        const bool ok_st = std::abs(got_st / want_st - 1.0) <= 0.05;
        r.pass = r.pass && ok_tb && ok_st;
        r.details.push_back("N=" + std::to_string(n) + ": TB/Max-Min " + fmt(got_tb) + " vs " +
                            fmt(want_tb) + (ok_tb ? "" : "  <-- off") + "; STBC/Max-Min " +
                            fmt(got_st) + " vs " + fmt(want_st) + (ok_st ? "" : "  <-- off"));
        if (n == 4) {
            const bool ordering = got_st > 1.0;
            r.pass = r.pass && ordering;
            r.details.push_back("N=4 ordering: STBC/Max-Min = " + fmt(got_st) +
                                " > 1, Max-Min keeps a coding gain" +
                                (ordering ? "" : "  <-- ordering violated"));
        }
    }
    return r;
}

// ---- criterion 5: Max-Min MGF identity (sum vs product form) -------------

CriterionResult criterion_mgf_identity(const VerifyOptions& o) {
    const double tol = o.negative_control ? -1.0 : 1e-10;
    RandomStream stream(12345, 0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const int n = 1 + static_cast<int>(stream.next_index(8));
        const double t = 100.0 * static_cast<double>(stream.next_u64() >> 11) * 0x1.0p-53;
        const double snr = 2.0;
        const MgfSpec spec{Scheme::maxmin_as_bnc, n, 1.0, snr};
        const double product = mgf(spec, t);
        const double sum = mgf_maxmin_sum_form(n, 1.0, snr, t);
        const double rel = std::abs(product - sum) / std::max(std::abs(product), 1e-300);
        worst = std::max(worst, rel);
    }
    CriterionResult r;
    r.pass = worst <= tol;
    r.details.push_back("1000 samples, N in [1,8], t in [0,100]: worst relative difference " +
                        fmt(worst) + " (tolerance " + fmt(tol) + ")");
    if (o.negative_control) {
        r.details.push_back("negative control active: tolerance corrupted to force failure");
    }
    return r;
}

// ---- criterion 6: diversity order from the MGF limit ---------------------

CriterionResult criterion_diversity_limit(const VerifyOptions&) {
    CriterionResult r;
    r.pass = true;
    for (const Scheme scheme : {Scheme::tb, Scheme::maxmin_as_bnc, Scheme::stbc_bnc}) {
        std::string line = to_string(scheme) + ":";
        for (int n = 1; n <= 4; ++n) {
            const MgfSpec spec{scheme, n, 1.0, 1.0};
            const double order = diversity_order_analytic(spec, 4);
            const bool ok = std::abs(order - n) <= 0.05;
            r.pass = r.pass && ok;
            line += " " + fmt(order) + (ok ? "" : "(off)");
        }
        r.details.push_back(line + "  (want 1..4 within 0.05)");
    }
    return r;
}

// ---- criterion 7: union bound dominates the simulated uplink SEP ---------

CriterionResult criterion_union_bound(const VerifyOptions& o) {
    const int64_t trials = o.quick ? 100000 : 1000000;
    const int64_t realizations = o.quick ? 100000 : 400000;
    CriterionResult r;
    r.pass = true;
    r.details.push_back("uplink_only, N=2, QPSK, 0-20 dB, " + std::to_string(trials) +
                        " trials/point, bound averaged over " + std::to_string(realizations) +
                        " channel draws");
    SimConfig cfg;
    cfg.scheme = Scheme::tb;  // the uplink does not depend on the downlink scheme
    cfg.mode = Mode::uplink_only;
    cfg.antennas = 2;
    cfg.order = 4;
    cfg.trials = trials;
    cfg.seed = 7;
    cfg.bound_realizations = realizations;
    for (const auto& row : sweep(cfg, make_grid(0, 20, 2))) {
        SimConfig point = cfg;
        point.relay_snr_db = row.snr_db;
        point.node_snr_db = row.snr_db;
        const double bound = averaged_union_bound_marginal(point);
        const bool ok = bound >= row.sep_simulated;
        r.pass = r.pass && ok;
        r.details.push_back(fmt(row.snr_db) + " dB: bound " + fmt(bound) + " vs sim " +
                            fmt(row.sep_simulated) + (ok ? "" : "  <-- bound violated"));
    }
    return r;
}

// ---- criterion 8: determinism across worker counts ------------------------

CriterionResult criterion_determinism(const VerifyOptions& o) {
    const int64_t trials = o.quick ? 50000 : 200000;
    SimConfig cfg;
    cfg.scheme = Scheme::maxmin_as_bnc;
    cfg.mode = Mode::end_to_end;
    cfg.antennas = 2;
    cfg.order = 4;
    cfg.trials = trials;
    cfg.seed = 42;
    cfg.relay_snr_db = 12.0;
    cfg.node_snr_db = 12.0;

    CriterionResult r;
    r.pass = true;
    std::vector<int64_t> counts;
    for (const int workers : {1, 4, 16}) {
        SimConfig c = cfg;
        c.workers = workers;
        counts.push_back(estimate_sep(c).errors);
    }
    const bool same = counts[0] == counts[1] && counts[1] == counts[2];
    r.pass = same;
    r.details.push_back("error counts across workers {1,4,16}: " + std::to_string(counts[0]) +
                        ", " + std::to_string(counts[1]) + ", " + std::to_string(counts[2]) +
                        (same ? " (identical)" : "  <-- mismatch"));

    const auto emit = [&](int workers) {
        SimConfig c = cfg;
        c.workers = workers;
        std::vector<OutputRecord> rows;
        for (const auto& point : sweep(c, std::vector<double>{8, 12})) {
            rows.push_back(OutputRecord{c.scheme, c.antennas, c.order, c.mode, c.seed, point});
        }
        return to_csv(rows);
    };
    const std::string csv1 = emit(1);
    const std::string csv16 = emit(16);
    const bool csv_same = csv1 == csv16;
    r.pass = r.pass && csv_same;
    r.details.push_back(csv_same ? "CSV output byte-identical across worker counts"
                                 : "CSV output differs across worker counts");
    return r;
}

// ---- criterion 9: module property spot checks -----------------------------

CriterionResult criterion_properties(const VerifyOptions&) {
    CriterionResult r;
    r.pass = true;
    const Constellation qpsk = build_constellation(4);

    // Noiseless end-to-end chains are identity maps.
    for (const Scheme scheme : {Scheme::tb, Scheme::maxmin_as_bnc, Scheme::stbc_bnc}) {
        for (const int n : {2, 3}) {
            SimConfig cfg;
            cfg.scheme = scheme;
            cfg.mode = Mode::end_to_end;
            cfg.antennas = n;
            cfg.order = 4;
            cfg.trials = 2000;
            cfg.seed = 9;
            cfg.relay_snr_db = 100.0;
            cfg.node_snr_db = 100.0;
            const auto est = estimate_sep(cfg);
            if (est.errors != 0) {
                r.pass = false;
                r.details.push_back("noiseless chain " + to_string(scheme) + " N=" +
                                    std::to_string(n) + " produced errors");
            }
        }
    }
    r.details.push_back("noiseless end-to-end chains: identity for all schemes");

    // Transmit power normalization, exact per realization.
    RandomStream stream(11, 0);
    double worst_tb = 0.0, worst_al = 0.0;
    for (int draw = 0; draw < 20; ++draw) {
        DownlinkChannels d;
        sample_downlink(d, 4, 1.0, stream);
        double mean_power = 0.0;
        for (int a = 0; a < 4; ++a) {
            for (int b = 0; b < 4; ++b) {
                const cvec tx = tb_precode(a, b, d, qpsk, 1.0);
                double p = 0.0;
                for (const auto& z : tx) p += std::norm(z);
                mean_power += p;
            }
        }
        worst_tb = std::max(worst_tb, std::abs(mean_power / 16.0 - 1.0));
    }
    for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
            const AlamoutiBlock block = alamouti_encode(qpsk.points[a], qpsk.points[b]);
            const double p0 = 0.5 * (std::norm(block.slot0[0]) + std::norm(block.slot0[1]));
            const double p1 = 0.5 * (std::norm(block.slot1[0]) + std::norm(block.slot1[1]));
            worst_al = std::max({worst_al, std::abs(p0 - 1.0), std::abs(p1 - 1.0)});
        }
    }
    if (worst_tb > 1e-12 || worst_al > 1e-12) {
        r.pass = false;
        r.details.push_back("power normalization off: tb " + fmt(worst_tb) + ", alamouti " +
                            fmt(worst_al));
    } else {
        r.details.push_back("transmit power normalized to P within 1e-12 (TB and Alamouti)");
    }

    // XOR label algebra forms an abelian group.
    for (const int order : {2, 4, 8}) {
        const Constellation c = build_constellation(order);
        bool ok = true;
        for (int a = 0; a < order && ok; ++a) {
            for (int b = 0; b < order && ok; ++b) {
                ok = ok && xor_combine(a, b, c) == xor_combine(b, a, c);
                ok = ok && xor_decode(xor_combine(a, b, c), a, c) == b;
                for (int d = 0; d < order && ok; ++d) {
                    ok = ok && xor_combine(xor_combine(a, b, c), d, c) ==
                                   xor_combine(a, xor_combine(b, d, c), c);
                }
            }
        }
        if (!ok) {
            r.pass = false;
            r.details.push_back("XOR group law violated at M=" + std::to_string(order));
        }
    }
    r.details.push_back("XOR combine/decode: abelian group laws hold for M in {2,4,8}");

    // Max-Min selection equals a naive two-pass oracle.
    RandomStream sel_stream(13, 0);
    bool sel_ok = true;
    for (int draw = 0; draw < 10000 && sel_ok; ++draw) {
        DownlinkChannels d;
        sample_downlink(d, 4, 1.0, sel_stream);
        int best = 0;
        double best_val = -1.0;
        for (int i = 0; i < 4; ++i) {
            const double a = std::abs(d.relay_to_a[i]);
            const double b = std::abs(d.relay_to_b[i]);
            const double worse = a < b ? a : b;
            if (worse > best_val) {
                best_val = worse;
                best = i;
            }
        }
        sel_ok = maxmin_select(d) == best;
    }
    if (!sel_ok) {
        r.pass = false;
        r.details.push_back("maxmin_select disagrees with the two-pass oracle");
    } else {
        r.details.push_back("maxmin_select matches the two-pass oracle on 10^4 draws");
    }
    return r;
}

struct Criterion {
    int id;
    std::string name;
    std::function<CriterionResult(const VerifyOptions&)> fn;
};

} // namespace

bool run_verification(const VerifyOptions& options, std::ostream& out) {
    const std::vector<Criterion> criteria = {
        {1, "Max-Min AS-BNC achieves full downlink diversity", criterion_diversity_maxmin},
        {2, "analytic and simulated downlink SEP agree (N=2, QPSK)", criterion_analytic_agreement},
        {3, "TB holds a 0.5 dB end-to-end advantage; BNC curves coincide", criterion_tb_advantage},
        {4, "asymptotic SEP ratios match 2/N! and N^N/(2^(N-1) N!)", criterion_asymptotic_ratios},
        {5, "Max-Min MGF sum and product forms agree", criterion_mgf_identity},
        {6, "MGF high-SNR limit recovers the diversity order", criterion_diversity_limit},
        {7, "union bound dominates the simulated uplink SEP", criterion_union_bound},
        {8, "results are deterministic across worker counts", criterion_determinism},
        {9, "module property spot checks", criterion_properties},
    };

    bool all_pass = true;
    int executed = 0;
    for (const auto& criterion : criteria) {
        if (!options.only.empty() &&
            std::find(options.only.begin(), options.only.end(), criterion.id) == options.only.end()) {
            continue;
        }
        ++executed;
        out << "[C" << criterion.id << "] " << criterion.name << "\n";
        CriterionResult result;
        try {
            result = criterion.fn(options);
        } catch (const std::exception& e) {
            result.pass = false;
            result.details.push_back(std::string("exception: ") + e.what());
        }
        for (const auto& line : result.details) {
            out << "      " << line << "\n";
        }
        out << "      -> " << (result.pass ? "PASS" : "FAIL") << "\n";
        all_pass = all_pass && result.pass;
    }
    if (executed == 0) {
        out << "no criteria selected\n";
        return false;
    }
    out << (all_pass ? "RESULT: PASS" : "RESULT: FAIL") << " (" << executed
        << " criteria executed)\n";
    return all_pass;
}

} // namespace relaysim
