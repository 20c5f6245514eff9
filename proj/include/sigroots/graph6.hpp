#pragma once

#include <string>
#include <string_view>

#include "sigroots/graph.hpp"

namespace sigroots {

/// Decode one graph6 record. A trailing LF (or CRLF) is accepted; anything
/// else after the bit field, or a nonzero padding bit, is a parse_error.
Graph parse_graph6(std::string_view line);

/// Encode without the trailing newline.
std::string emit_graph6(const Graph& g);

}  // namespace sigroots
