// SPDX-License-Identifier: Apache-2.0
#include "relaysim/output.hpp"

#include <cstdio>

#include <json.hpp>

namespace relaysim {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

std::string csv_header() {
    return "scheme,N,M,mode,snr_db,sep_analytic,sep_sim,ci_low,ci_high,errors,trials,seed";
}

std::string csv_row(const OutputRecord& rec) {
    std::string row;
    row += to_string(rec.scheme);
    row += ',' + std::to_string(rec.antennas);
    row += ',' + std::to_string(rec.order);
    row += ',' + to_string(rec.mode);
    row += ',' + format_double(rec.point.snr_db);
    row += ',' + format_double(rec.point.sep_analytic);
    row += ',' + format_double(rec.point.sep_simulated);
    row += ',' + format_double(rec.point.ci_low);
    row += ',' + format_double(rec.point.ci_high);
    row += ',' + std::to_string(rec.point.errors);
    row += ',' + std::to_string(rec.point.trials);
    row += ',' + std::to_string(rec.seed);
    return row;
}

std::string to_csv(const std::vector<OutputRecord>& rows,
                   const std::vector<std::string>& summary_lines) {
    std::string out = csv_header() + '\n';
    for (const auto& rec : rows) {
        out += csv_row(rec) + '\n';
    }
    for (const auto& line : summary_lines) {
        out += "# " + line + '\n';
    }
    return out;
}

std::string to_json(const std::vector<OutputRecord>& rows,
                    const std::vector<std::string>& summary_lines) {
    nlohmann::json doc;
    doc["rows"] = nlohmann::json::array();
    for (const auto& rec : rows) {
        doc["rows"].push_back({
            {"scheme", to_string(rec.scheme)},
            {"N", rec.antennas},
            {"M", rec.order},
            {"mode", to_string(rec.mode)},
            {"snr_db", rec.point.snr_db},
            {"sep_analytic", rec.point.sep_analytic},
            {"sep_sim", rec.point.sep_simulated},
            {"ci_low", rec.point.ci_low},
            {"ci_high", rec.point.ci_high},
            {"errors", rec.point.errors},
            {"trials", rec.point.trials},
            {"seed", rec.seed},
        });
    }
    doc["summary"] = summary_lines;
    return doc.dump(2) + "\n";
}

} // namespace relaysim
