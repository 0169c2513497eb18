#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "expanderlab/bounds.hpp"

namespace expanderlab {

/// Fixed CSV column order.
inline constexpr const char* kReportColumns[] = {
    "suite", "theorem_id", "p",     "family", "size_A", "size_B", "size_C",
    "m",     "lhs",        "rhs",   "ratio",  "holds",  "exponent", "seed"};

/// Stable sort by (suite, theorem_id, p, seed).
void sort_reports(std::vector<BoundReport>& reports);

/// RFC-4180 field quoting.
std::string csv_escape(const std::string& field);

/// Header plus one line per record, CRLF line endings.
void write_csv(std::ostream& os, const std::vector<BoundReport>& reports);
/// Array of flat records with sorted keys, one record per line.
void write_json(std::ostream& os, const std::vector<BoundReport>& reports);

/// Shortest decimal that round-trips (printf %.17g trimmed).
std::string format_double(double x);

}  // namespace expanderlab
