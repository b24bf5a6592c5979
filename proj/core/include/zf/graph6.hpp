#pragma once

#include <string>

#include "zf/graph.hpp"

namespace zf {

// graph6 byte format: header N(n) (single byte n+63 for n <= 62, or 126
// followed by three bytes holding an 18-bit n for larger graphs), then the
// upper-triangle adjacency bits in column order x(0,1), x(0,2), x(1,2), ...,
// packed 6 per byte big-endian with each byte offset by 63. Trailing padding
// bits are written as zero.

std::string encode_graph6(const Graph& g);

// Throws MalformedHeader / TruncatedBitVector / NonPrintableByte.
Graph decode_graph6(const std::string& text);

}  // namespace zf
