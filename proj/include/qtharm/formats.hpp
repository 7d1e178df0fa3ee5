#pragma once

#include <string>
#include <string_view>

#include "qtharm/graph.hpp"

namespace qtharm {

// graph6: printable line format for small simple graphs. One byte size
// header (n + 63, n <= 62), then ceil(n(n-1)/2 / 6) payload bytes, each
// 63 + a big-endian 6-bit group of the upper-triangle bit vector in column
// order (0,1),(0,2),(1,2),(0,3),... Zero padding bits are enforced on
// decode; multi-byte headers are out of scope and rejected.
Graph decode_graph6(std::string_view line);          // parse error with byte offset
std::string encode_graph6(const Graph& g);           // capacity error when n > 62

// Plain text edge list: first line "n m", then m lines "u v" with 0-based
// ids. Parse rejects self-loops, duplicates and out-of-range ids with the
// offending line number; emit writes sorted, deduplicated lines.
Graph parse_edge_list(std::string_view text);
std::string emit_edge_list(const Graph& g);

}  // namespace qtharm
