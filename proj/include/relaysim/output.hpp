// SPDX-License-Identifier: Apache-2.0
#ifndef RELAYSIM_OUTPUT_HPP
#define RELAYSIM_OUTPUT_HPP

#include "relaysim/analysis.hpp"
#include "relaysim/engine.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace relaysim {

/// One emitted result row: a curve point plus the run metadata that pins it.
struct OutputRecord {
    Scheme scheme = Scheme::tb;
    int antennas = 0;
    int order = 0;
    Mode mode = Mode::end_to_end;
    uint64_t seed = 0;
    SepCurvePoint point;
};

/// Fixed column order shared by the CSV writer and the JSON envelope.
std::string csv_header();
std::string csv_row(const OutputRecord& rec);

/// Deterministic decimal formatting (9 significant digits) used for every
/// numeric field, so identical runs emit byte-identical files.
std::string format_double(double v);

std::string to_csv(const std::vector<OutputRecord>& rows,
                   const std::vector<std::string>& summary_lines = {});
std::string to_json(const std::vector<OutputRecord>& rows,
                    const std::vector<std::string>& summary_lines = {});

} // namespace relaysim

#endif
