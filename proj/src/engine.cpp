// SPDX-License-Identifier: Apache-2.0
#include "relaysim/engine.hpp"

#include "relaysim/downlink.hpp"
#include "relaysim/random.hpp"
#include "relaysim/stats.hpp"
#include "relaysim/uplink.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace relaysim {

namespace {

constexpr double kTxPower = 1.0;  // P; SNRs are realized through the noise powers
constexpr int64_t kChunkTrials = 8192;
constexpr uint64_t kBoundStreamBase = uint64_t{1} << 63;  // keeps bound draws off trial streams

double db_to_linear(double db) {
    return std::pow(10.0, db / 10.0);
}

void validate(const SimConfig& cfg) {
    if (cfg.antennas < 1) throw std::invalid_argument("SimConfig: antennas must be >= 1");
    if (cfg.trials < 1) throw std::invalid_argument("SimConfig: trials must be >= 1");
    if (!std::isfinite(cfg.relay_snr_db) || !std::isfinite(cfg.node_snr_db)) {
        throw std::invalid_argument("SimConfig: SNRs must be finite");
    }
    if (cfg.channel_power <= 0.0) throw std::invalid_argument("SimConfig: channel power must be positive");
    if (cfg.max_errors < 0) throw std::invalid_argument("SimConfig: max_errors must be >= 0");
    if (cfg.mode == Mode::maxmin_state1 && cfg.scheme != Scheme::maxmin_as_bnc) {
        throw std::invalid_argument("SimConfig: state1 mode applies to the Max-Min scheme only");
    }
}

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("RELAYSIM_THREADS")) {
        const long n = std::strtol(env, nullptr, 10);
        if (n > 0) return static_cast<int>(n);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

} // namespace

std::string to_string(Mode m) {
    switch (m) {
        case Mode::end_to_end: return "e2e";
        case Mode::downlink_only: return "downlink";
        case Mode::uplink_only: return "uplink";
        case Mode::maxmin_state1: return "state1";
    }
    return "unknown";
}

bool run_trial(const SimConfig& cfg, const Constellation& c, int64_t index, TrialWorkspace& ws) {
    RandomStream stream(cfg.seed, static_cast<uint64_t>(index));
    const double relay_noise = kTxPower / db_to_linear(cfg.relay_snr_db);
    const double node_noise = kTxPower / db_to_linear(cfg.node_snr_db);
    const double amp = std::sqrt(kTxPower);
    const int n = cfg.antennas;
    const uint32_t order = static_cast<uint32_t>(c.order);

    const int sym_a = static_cast<int>(stream.next_index(order));
    const int sym_b = static_cast<int>(stream.next_index(order));

    int relay_a = sym_a;
    int relay_b = sym_b;
    if (cfg.mode == Mode::end_to_end || cfg.mode == Mode::uplink_only) {
        sample_uplink(ws.uplink, n, cfg.channel_power, stream);
        ws.received.resize(n);
        const cplx xa = amp * c.points[sym_a];
        const cplx xb = amp * c.points[sym_b];
        for (int i = 0; i < n; ++i) {
            ws.received[i] = ws.uplink.a_to_relay[i] * xa + ws.uplink.b_to_relay[i] * xb +
                             stream.next_complex_gaussian(relay_noise);
        }
        const auto detected = ml_detect(std::span<const cplx>(ws.received), ws.uplink, c, kTxPower);
        relay_a = detected.first;
        relay_b = detected.second;
        if (cfg.mode == Mode::uplink_only) {
            return relay_b != sym_b;
        }
    }

    sample_downlink(ws.downlink, n, cfg.channel_power, stream);
    if (cfg.mode == Mode::maxmin_state1) {
        // Condition on the A-side channel of the selected antenna being the
        // weaker one; rejected draws are simply redrawn from the same stream.
        for (;;) {
            const int j = maxmin_select(ws.downlink);
            if (std::abs(ws.downlink.relay_to_a[j]) <= std::abs(ws.downlink.relay_to_b[j])) break;
            sample_downlink(ws.downlink, n, cfg.channel_power, stream);
        }
    }

    int decoded;
    switch (cfg.scheme) {
        case Scheme::tb: {
            const cvec tx = tb_precode(relay_a, relay_b, ws.downlink, c, kTxPower);
            cplx y = stream.next_complex_gaussian(node_noise);
            for (int i = 0; i < n; ++i) y += ws.downlink.relay_to_a[i] * tx[i];
            // Perfect self-interference cancellation: the node strips the
            // whole beam that carries the A-side symbol (relay_a), so its
            // receiver output reduces to ||h_RA|| x_B / sqrt(2) + noise even
            // when the relay misdetected that symbol.
            decoded = node_receive_tb(y, ws.downlink, relay_a, c, kTxPower);
            break;
        }
        case Scheme::maxmin_as_bnc: {
            const int coded = xor_combine(relay_a, relay_b, c);
            const int j = maxmin_select(ws.downlink);
            BncObservation obs;
            obs.count = 1;
            obs.samples[0] = ws.downlink.relay_to_a[j] * amp * c.points[coded] +
                             stream.next_complex_gaussian(node_noise);
            decoded = node_receive_bnc(obs, cfg.scheme, ws.downlink, sym_a, c, kTxPower);
            break;
        }
        case Scheme::stbc_bnc: {
            const int coded = xor_combine(relay_a, relay_b, c);
            BncObservation obs;
            if (n == 2) {
                // Explicit Alamouti block; the companion symbol stands in for
                // the next buffered network-coded symbol and does not couple
                // into the measured one after orthogonal combining.
                const int companion = static_cast<int>(stream.next_index(order));
                const AlamoutiBlock block =
                    alamouti_encode(amp * c.points[coded], amp * c.points[companion]);
                const auto& h = ws.downlink.relay_to_a;
                constexpr double inv_sqrt2 = 0.70710678118654752440;
                obs.count = 2;
                obs.samples[0] = (h[0] * block.slot0[0] + h[1] * block.slot0[1]) * inv_sqrt2 +
                                 stream.next_complex_gaussian(node_noise);
                obs.samples[1] = (h[0] * block.slot1[0] + h[1] * block.slot1[1]) * inv_sqrt2 +
                                 stream.next_complex_gaussian(node_noise);
            } else {
                double gain_sq = 0.0;
                for (const auto& g : ws.downlink.relay_to_a) gain_sq += std::norm(g);
                const double signal_amp = std::sqrt(gain_sq * kTxPower / n);
                obs.count = 1;
                obs.samples[0] =
                    signal_amp * c.points[coded] + stream.next_complex_gaussian(node_noise);
            }
            decoded = node_receive_bnc(obs, cfg.scheme, ws.downlink, sym_a, c, kTxPower);
            break;
        }
        default:
            throw std::invalid_argument("run_trial: unknown scheme");
    }
    return decoded != sym_b;
}

bool run_trial(const SimConfig& cfg, int64_t index) {
    validate(cfg);
    const Constellation c = build_constellation(cfg.order);
    TrialWorkspace ws;
    return run_trial(cfg, c, index, ws);
}

SepEstimate estimate_sep(const SimConfig& cfg) {
    validate(cfg);
    const Constellation c = build_constellation(cfg.order);
    const int64_t total_chunks = (cfg.trials + kChunkTrials - 1) / kChunkTrials;
    const int workers = std::min<int64_t>(resolve_workers(cfg.workers), total_chunks);

    std::vector<int64_t> chunk_errors(static_cast<std::size_t>(total_chunks), -1);
    std::atomic<int64_t> next_chunk{0};
    std::atomic<int64_t> stop_limit{total_chunks};
    std::mutex fold_mutex;
    int64_t frontier = 0;
    int64_t folded_errors = 0;

    auto worker = [&]() {
        TrialWorkspace ws;
        for (;;) {
            const int64_t k = next_chunk.fetch_add(1, std::memory_order_relaxed);
            if (k >= total_chunks || k >= stop_limit.load(std::memory_order_relaxed)) break;
            const int64_t begin = k * kChunkTrials;
            const int64_t end = std::min(begin + kChunkTrials, cfg.trials);
            int64_t count = 0;
            for (int64_t t = begin; t < end; ++t) {
                count += run_trial(cfg, c, t, ws) ? 1 : 0;
            }
            std::lock_guard<std::mutex> lock(fold_mutex);
            chunk_errors[static_cast<std::size_t>(k)] = count;
            // Fold completed chunks in index order so the early-stop point is
            // a deterministic prefix, independent of scheduling.
            while (frontier < total_chunks && chunk_errors[static_cast<std::size_t>(frontier)] >= 0) {
                folded_errors += chunk_errors[static_cast<std::size_t>(frontier)];
                ++frontier;
                if (cfg.max_errors > 0 && folded_errors >= cfg.max_errors &&
                    frontier < stop_limit.load(std::memory_order_relaxed)) {
                    stop_limit.store(frontier, std::memory_order_relaxed);
                    break;
                }
            }
        }
    };

    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    const int64_t effective_chunks = std::min<int64_t>(stop_limit.load(), total_chunks);
    int64_t errors = 0;
    for (int64_t k = 0; k < effective_chunks; ++k) {
        errors += chunk_errors[static_cast<std::size_t>(k)];
    }
    const int64_t used_trials = std::min(effective_chunks * kChunkTrials, cfg.trials);

    SepEstimate est;
    est.errors = errors;
    est.trials = used_trials;
    est.sep = static_cast<double>(errors) / static_cast<double>(used_trials);
    const auto [lo, hi] = wilson_interval(errors, used_trials);
    est.ci_low = lo;
    est.ci_high = hi;
    return est;
}

double averaged_union_bound_marginal(const SimConfig& cfg, int64_t realizations) {
    validate(cfg);
    if (realizations == 0) realizations = cfg.bound_realizations;
    if (realizations < 1) throw std::invalid_argument("averaged_union_bound_marginal: realizations >= 1");
    const Constellation c = build_constellation(cfg.order);
    const double relay_noise = kTxPower / db_to_linear(cfg.relay_snr_db);

    constexpr int64_t kChunk = 4096;
    const int64_t chunks = (realizations + kChunk - 1) / kChunk;
    std::vector<double> partial(static_cast<std::size_t>(chunks), 0.0);
    std::atomic<int64_t> next{0};
    auto worker = [&]() {
        UplinkChannel channel;
        for (;;) {
            const int64_t k = next.fetch_add(1, std::memory_order_relaxed);
            if (k >= chunks) break;
            double sum = 0.0;
            const int64_t end = std::min((k + 1) * kChunk, realizations);
            for (int64_t r = k * kChunk; r < end; ++r) {
                RandomStream stream(cfg.seed, kBoundStreamBase + static_cast<uint64_t>(r));
                sample_uplink(channel, cfg.antennas, cfg.channel_power, stream);
                sum += union_bound_sep(channel, c, relay_noise, kTxPower).marginal_b;
            }
            partial[static_cast<std::size_t>(k)] = sum;
        }
    };
    const int workers = std::min<int64_t>(resolve_workers(cfg.workers), chunks);
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    // Chunk-ordered reduction keeps the floating-point result independent of
    // the worker count.
    double total = 0.0;
    for (const double s : partial) total += s;
    return total / static_cast<double>(realizations);
}

double analytic_sep(const SimConfig& cfg) {
    validate(cfg);
    const MgfSpec spec{cfg.scheme, cfg.antennas, cfg.channel_power, db_to_linear(cfg.node_snr_db)};
    switch (cfg.mode) {
        case Mode::downlink_only:
            return std::min(1.0, sep_downlink(spec, cfg.order));
        case Mode::maxmin_state1:
            return std::min(1.0, sep_downlink_maxmin_bounds(spec, cfg.order).upper);
        case Mode::uplink_only:
            return std::min(1.0, averaged_union_bound_marginal(cfg));
        case Mode::end_to_end: {
            const double p_up = std::min(1.0, averaged_union_bound_marginal(cfg));
            const double p_down = std::min(1.0, sep_downlink(spec, cfg.order));
            return total_sep(p_up, p_down);
        }
    }
    throw std::invalid_argument("analytic_sep: unknown mode");
}

std::vector<SepCurvePoint> sweep(const SimConfig& cfg, std::span<const double> snr_db) {
    if (snr_db.empty()) throw std::invalid_argument("sweep: SNR list must not be empty");
    std::vector<SepCurvePoint> rows;
    rows.reserve(snr_db.size());
    for (const double snr : snr_db) {
        SimConfig point = cfg;
        point.relay_snr_db = cfg.fixed_relay_snr_db.value_or(snr);
        point.node_snr_db = cfg.fixed_node_snr_db.value_or(snr);
        const SepEstimate est = estimate_sep(point);
        SepCurvePoint row;
        row.snr_db = snr;
        row.scheme = cfg.scheme;
        row.sep_analytic = analytic_sep(point);
        row.sep_simulated = est.sep;
        row.ci_low = est.ci_low;
        row.ci_high = est.ci_high;
        row.trials = est.trials;
        row.errors = est.errors;
        rows.push_back(row);
    }
    return rows;
}

} // namespace relaysim
