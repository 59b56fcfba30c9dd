#pragma once

#include <string>
#include <string_view>

#include "pps/graph.hpp"

namespace pps {

/// Decodes one graph6 line (optional ">>graph6<<" header, trailing newline or
/// carriage return tolerated). Supports the 1-byte (n <= 62) and 3-byte
/// (63 <= n <= 258047) size classes.
Graph parse_graph6(std::string_view line);

/// Encodes into graph6. Inverse of parse_graph6 within the supported size
/// classes; throws SizeUnsupported for n >= 258048.
std::string to_graph6(const Graph& g);

} // namespace pps
