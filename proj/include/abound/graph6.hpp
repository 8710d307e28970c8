#pragma once

// graph6: optional ">>graph6<<" header, n in 1, 4 or 8 bytes, then the upper
// triangle read column by column, six bits per byte, each byte offset by 63.

#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "abound/graph.hpp"

namespace abound {

std::string to_graph6(const Graph& g);

/// Throws Graph6Error carrying the 0-based offset of the offending byte.
Graph from_graph6(std::string_view text);

/// One graph per nonblank line.  Offsets in errors count from the start of
/// the offending line, and the message names the line number.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace abound
