#pragma once

#include <istream>
#include <string>
#include <vector>

namespace bubblekit::csv {

/// One parsed CSV table: header + rows of string cells. No quoting support;
/// the formats this project defines never embed commas.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    /// Column index by header name, -1 if absent.
    int column(const std::string& name) const;
};

std::vector<std::string> split_line(const std::string& line);

/// Reads header + rows, trimming whitespace and skipping blank lines.
Table read(std::istream& in);

Table read_file(const std::string& path);

/// Parses a full-cell double; throws IngestError naming `context` otherwise.
double parse_double(const std::string& cell, const std::string& context);

/// Shortest-ish decimal form that reparses to within 1e-12 relative; stable
/// for report determinism.
std::string format_double(double v);

}  // namespace bubblekit::csv
