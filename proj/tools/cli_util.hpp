#pragma once

// Formatting and argument-shape helpers shared by the CLI and its tests.

#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tmf::cli {

inline std::string fmt_double(double v) {
    if (v == -std::numeric_limits<double>::infinity()) return "-inf";
    if (v == std::numeric_limits<double>::infinity()) return "inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// "start:stop:step", stop included (to within step * 1e-9); a bare number is
// a one-point grid.
inline std::vector<double> parse_range(const std::string& spec) {
    std::vector<double> parts;
    std::stringstream ss(spec);
    std::string field;
    while (std::getline(ss, field, ':')) parts.push_back(std::stod(field));
    if (parts.size() == 1) return {parts[0]};
    if (parts.size() != 3) throw std::invalid_argument("range must be start:stop:step");
    const double start = parts[0], stop = parts[1], step = parts[2];
    if (step <= 0.0 || stop < start) throw std::invalid_argument("range must ascend");
    std::vector<double> out;
    for (double v = start; v <= stop + step * 1e-9; v += step) out.push_back(v);
    return out;
}

// RFC 4180 body: one header line, CRLF line breaks.
inline std::string csv_text(const std::string& header,
                            const std::vector<std::vector<std::string>>& rows) {
    std::ostringstream body;
    body << header << "\r\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) body << ',';
            body << row[i];
        }
        body << "\r\n";
    }
    return body.str();
}

}  // namespace tmf::cli
