// SPDX-License-Identifier: Apache-2.0
#include "relaysim/cli.hpp"

#include "relaysim/engine.hpp"
#include "relaysim/errors.hpp"
#include "relaysim/output.hpp"
#include "relaysim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace relaysim {

namespace {

Scheme parse_scheme(const std::string& name) {
    if (name == "tb") return Scheme::tb;
    if (name == "maxmin") return Scheme::maxmin_as_bnc;
    if (name == "stbc") return Scheme::stbc_bnc;
    throw CLI::ValidationError("--scheme", "unknown scheme '" + name + "' (expected tb|maxmin|stbc)");
}

Mode parse_mode(const std::string& name) {
    if (name == "e2e") return Mode::end_to_end;
    if (name == "downlink") return Mode::downlink_only;
    if (name == "uplink") return Mode::uplink_only;
    if (name == "state1") return Mode::maxmin_state1;
    throw CLI::ValidationError("--mode", "unknown mode '" + name + "' (expected e2e|downlink|uplink|state1)");
}

int parse_modulation(const std::string& spec) {
    if (spec.rfind("mpsk:", 0) != 0) {
        throw CLI::ValidationError("--mod", "expected mpsk:M, got '" + spec + "'");
    }
    int order = 0;
    try {
        order = std::stoi(spec.substr(5));
    } catch (const std::exception&) {
        throw CLI::ValidationError("--mod", "bad order in '" + spec + "'");
    }
    if (order < 2 || order > 64 || (order & (order - 1)) != 0) {
        throw CLI::ValidationError("--mod", "order must be a power of two in [2, 64]");
    }
    return order;
}

std::vector<double> parse_snr_range(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    try {
        if (parts.size() == 1) {
            return {std::stod(parts[0])};
        }
        if (parts.size() == 3) {
            const double start = std::stod(parts[0]);
            const double stop = std::stod(parts[1]);
            const double step = std::stod(parts[2]);
            if (step <= 0.0 || stop < start) {
                throw CLI::ValidationError("--snr-db", "expected start:stop:step with step > 0, stop >= start");
            }
            std::vector<double> grid;
            const int count = static_cast<int>((stop - start) / step + 1e-9) + 1;
            for (int i = 0; i < count; ++i) grid.push_back(start + i * step);
            return grid;
        }
    } catch (const CLI::ValidationError&) {
        throw;
    } catch (const std::exception&) {
        // fall through to the generic message
    }
    throw CLI::ValidationError("--snr-db", "expected a value or start:stop:step, got '" + spec + "'");
}

void write_result(const std::string& text, const std::string& out_path, std::ostream& out) {
    if (out_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open output file '" + out_path + "'");
    }
    file << text;
}

std::vector<Scheme> resolve_schemes(const std::vector<std::string>& names) {
    std::vector<Scheme> schemes;
    for (const auto& name : names) {
        const Scheme s = parse_scheme(name);
        if (std::find(schemes.begin(), schemes.end(), s) == schemes.end()) {
            schemes.push_back(s);
        }
    }
    // Deterministic row order regardless of flag order.
    std::sort(schemes.begin(), schemes.end(),
              [](Scheme a, Scheme b) { return to_string(a) < to_string(b); });
    return schemes;
}

struct CommonFlags {
    std::vector<std::string> schemes{};
    int antennas = 2;
    std::string modulation = "mpsk:4";
    std::string snr = "0:25:5";
    std::string out_path{};
    std::string format = "csv";
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
    cmd->add_option("--scheme", flags.schemes, "downlink scheme: tb|maxmin|stbc (repeatable)")
        ->required();
    cmd->add_option("--antennas", flags.antennas, "relay antenna count N")->check(CLI::PositiveNumber);
    cmd->add_option("--mod", flags.modulation, "modulation, e.g. mpsk:4");
    cmd->add_option("--snr-db", flags.snr, "SNR grid in dB: value or start:stop:step");
    cmd->add_option("--out", flags.out_path, "write output to this file instead of stdout");
    cmd->add_option("--format", flags.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
}

int cmd_simulate(const CommonFlags& flags, Mode mode, int64_t trials, uint64_t seed,
                 int64_t max_errors, std::optional<double> relay_snr,
                 std::optional<double> node_snr, std::ostream& out) {
    const int order = parse_modulation(flags.modulation);
    const std::vector<double> grid = parse_snr_range(flags.snr);
    std::vector<OutputRecord> rows;
    for (const Scheme scheme : resolve_schemes(flags.schemes)) {
        SimConfig cfg;
        cfg.scheme = scheme;
        cfg.antennas = flags.antennas;
        cfg.order = order;
        cfg.mode = mode;
        cfg.trials = trials;
        cfg.seed = seed;
        cfg.max_errors = max_errors;
        cfg.fixed_relay_snr_db = relay_snr;
        cfg.fixed_node_snr_db = node_snr;
        for (const auto& point : sweep(cfg, grid)) {
            rows.push_back(OutputRecord{scheme, flags.antennas, order, mode, seed, point});
        }
    }
    const std::string text = flags.format == "json" ? to_json(rows) : to_csv(rows);
    write_result(text, flags.out_path, out);
    return 0;
}

int cmd_analyze(const CommonFlags& flags, std::ostream& out) {
    const int order = parse_modulation(flags.modulation);
    const std::vector<double> grid = parse_snr_range(flags.snr);
    const std::vector<Scheme> schemes = resolve_schemes(flags.schemes);

    std::string csv = "scheme,N,M,snr_db,sep_analytic,sep_analytic_upper\n";
    nlohmann::json json_rows = nlohmann::json::array();
    for (const Scheme scheme : schemes) {
        for (const double snr_db : grid) {
            const MgfSpec spec{scheme, flags.antennas, 1.0, std::pow(10.0, snr_db / 10.0)};
            double lower = sep_downlink(spec, order);
            double upper = lower;
            if (scheme == Scheme::maxmin_as_bnc) {
                upper = sep_downlink_maxmin_bounds(spec, order).upper;
            }
            csv += to_string(scheme) + ',' + std::to_string(flags.antennas) + ',' +
                   std::to_string(order) + ',' + format_double(snr_db) + ',' +
                   format_double(lower) + ',' + format_double(upper) + '\n';
            json_rows.push_back({{"scheme", to_string(scheme)},
                                 {"N", flags.antennas},
                                 {"M", order},
                                 {"snr_db", snr_db},
                                 {"sep_analytic", lower},
                                 {"sep_analytic_upper", upper}});
        }
    }

    std::vector<std::string> summary;
    for (const Scheme scheme : schemes) {
        const MgfSpec spec{scheme, flags.antennas, 1.0, 1.0};
        summary.push_back("diversity_order scheme=" + to_string(scheme) +
                          " N=" + std::to_string(flags.antennas) +
                          " value=" + format_double(diversity_order_analytic(spec, order)));
    }
    const std::vector<std::pair<Scheme, Scheme>> ratio_pairs = {
        {Scheme::tb, Scheme::maxmin_as_bnc},
        {Scheme::stbc_bnc, Scheme::maxmin_as_bnc},
        {Scheme::tb, Scheme::stbc_bnc},
    };
    for (const auto& [a, b] : ratio_pairs) {
        summary.push_back("asymptotic_ratio a=" + to_string(a) + " b=" + to_string(b) +
                          " N=" + std::to_string(flags.antennas) +
                          " value=" + format_double(asymptotic_ratio(a, b, flags.antennas)));
    }

    std::string text;
    if (flags.format == "json") {
        nlohmann::json doc;
        doc["rows"] = json_rows;
        doc["summary"] = summary;
        text = doc.dump(2) + "\n";
    } else {
        text = csv;
        for (const auto& line : summary) text += "# " + line + '\n';
    }
    write_result(text, flags.out_path, out);
    return 0;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"two-way relay link-level simulator"};
    app.require_subcommand(1);

    CommonFlags sim_flags;
    std::string mode_name = "e2e";
    int64_t trials = 100000;
    uint64_t seed = 0;
    int64_t max_errors = 0;
    std::optional<double> relay_snr_override;
    std::optional<double> node_snr_override;
    CLI::App* sim = app.add_subcommand("simulate", "Monte Carlo SEP sweep");
    add_common(sim, sim_flags);
    sim->add_option("--mode", mode_name, "e2e|downlink|uplink|state1");
    sim->add_option("--trials", trials, "Monte Carlo trials per point")->check(CLI::PositiveNumber);
    sim->add_option("--seed", seed, "master seed (all randomness derives from it)");
    sim->add_option("--max-errors", max_errors, "stop a point early after this many errors (0 = off)");
    sim->add_option("--relay-snr-db", relay_snr_override, "pin the uplink SNR instead of sweeping it");
    sim->add_option("--node-snr-db", node_snr_override, "pin the downlink SNR instead of sweeping it");

    CommonFlags ana_flags;
    CLI::App* ana = app.add_subcommand("analyze", "closed-form SEP, diversity orders, asymptotic ratios");
    add_common(ana, ana_flags);

    VerifyOptions verify_options;
    CLI::App* ver = app.add_subcommand("verify", "run the built-in verification suite");
    ver->add_flag("--quick", verify_options.quick, "reduced trials with widened tolerances");
    ver->add_option("--only", verify_options.only, "run only these criterion numbers");
    ver->add_flag("--negative-control", verify_options.negative_control,
                  "corrupt one tolerance; the suite must then fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (sim->parsed()) {
            return cmd_simulate(sim_flags, parse_mode(mode_name), trials, seed, max_errors,
                                relay_snr_override, node_snr_override, out);
        }
        if (ana->parsed()) {
            return cmd_analyze(ana_flags, out);
        }
        if (ver->parsed()) {
            return run_verification(verify_options, out) ? 0 : 1;
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const NumericalError& e) {
        err << "numerical failure: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace relaysim
