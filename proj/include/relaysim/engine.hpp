// SPDX-License-Identifier: Apache-2.0
#ifndef RELAYSIM_ENGINE_HPP
#define RELAYSIM_ENGINE_HPP

#include "relaysim/analysis.hpp"
#include "relaysim/channel.hpp"
#include "relaysim/constellation.hpp"
#include "relaysim/types.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace relaysim {

/// What a trial measures.
enum class Mode {
    end_to_end,     // uplink ML detection feeds the downlink broadcast
    downlink_only,  // relay transmits the true symbols; isolates P_d
    uplink_only,    // error = relay misdetecting node B's symbol
    maxmin_state1,  // downlink only, conditioned on the selected antenna's
                    // A-side channel being the weaker one (Max-Min only)
};

std::string to_string(Mode m);

struct SimConfig {
    Scheme scheme = Scheme::tb;
    int antennas = 2;
    int order = 4;               // M-PSK order
    Mode mode = Mode::end_to_end;
    double relay_snr_db = 10.0;  // zeta_R
    double node_snr_db = 10.0;   // zeta_S
    double channel_power = 1.0;  // sigma0^2
    int64_t trials = 100000;
    uint64_t seed = 0;
    int64_t max_errors = 0;      // 0 disables early stopping
    int workers = 0;             // 0 = RELAYSIM_THREADS env or hardware count
    int64_t bound_realizations = 200000;  // channel draws behind the averaged union bound

    // When set, sweep() pins this side's SNR instead of sweeping it.
    std::optional<double> fixed_relay_snr_db;
    std::optional<double> fixed_node_snr_db;
};

/// Monte Carlo tally with a 95% Wilson interval.
struct SepEstimate {
    int64_t errors = 0;
    int64_t trials = 0;
    double sep = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
};

/// Scratch buffers reused across trials by one worker.
struct TrialWorkspace {
    UplinkChannel uplink;
    DownlinkChannels downlink;
    cvec received;
};

/// Runs one end-to-end exchange for trial `index` and reports whether node A
/// misdetects node B's symbol (or the mode's narrower error event). Every
/// draw comes from stream (cfg.seed, index), so the indicator is a pure
/// function of (cfg, index) regardless of execution order.
bool run_trial(const SimConfig& cfg, const Constellation& c, int64_t index, TrialWorkspace& ws);

/// Convenience wrapper that builds the constellation and workspace.
bool run_trial(const SimConfig& cfg, int64_t index);

/// Aggregates run_trial over cfg.trials (in parallel when workers permit).
/// The error total is bit-identical for any worker count; optional early
/// stopping triggers on whole-chunk prefixes only, which keeps it that way.
SepEstimate estimate_sep(const SimConfig& cfg);

/// Channel-averaged union bound on the relay's misdetection of node B's
/// symbol, Monte-Carlo averaged over uplink draws taken from a stream
/// namespace disjoint from trial streams (cfg.bound_realizations of them
/// unless overridden; the average is fade-dominated at high SNR, so starve
/// it and it gets noisy). The reduction order is fixed, so the value is
/// bit-identical for any worker count.
double averaged_union_bound_marginal(const SimConfig& cfg, int64_t realizations = 0);

/// Analytic SEP matching cfg.mode: the downlink MGF integral, the Max-Min
/// conditional value in state1 mode, the averaged union bound in uplink
/// mode, or their series combination end to end. Clamped to [0, 1].
double analytic_sep(const SimConfig& cfg);

/// One SepCurvePoint per SNR in `snr_db`: both relay and node SNR follow the
/// sweep unless pinned via the config's fixed_* fields.
std::vector<SepCurvePoint> sweep(const SimConfig& cfg, std::span<const double> snr_db);

} // namespace relaysim

#endif
