#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "qhm/core.hpp"

namespace qhm {

// Plain-text exchange format for quadratic maps:
//
//   # comment lines and blank lines are ignored
//   qhm <m> <n>
//   <n blocks of m x m entries, row by row, whitespace-separated>
//
// Entries are integers, rationals "p/q", or decimal floats. A file whose
// entries are all integers or rationals parses to an exact-mode map and
// round-trips bit-exactly; any decimal entry makes the whole map float mode.
// Component blocks must be symmetric. All format problems raise ParseError.
QuadraticMap read_map(std::istream& in);
QuadraticMap read_map_file(const std::string& path);
QuadraticMap parse_map(std::string_view text);

// Exact entries are written canonically ("p" or "p/q"); floats with 17
// significant digits, which round-trips IEEE doubles exactly.
void write_map(std::ostream& out, const QuadraticMap& map);
std::string format_map(const QuadraticMap& map);

} // namespace qhm
