#pragma once

#include <string>
#include <string_view>

#include "qsr/graph.hpp"

// graph6 codec (McKay's format): printable-ASCII encoding of the upper
// triangle of the adjacency matrix, entry (i,j) with i<j ordered by j then i,
// packed big-endian into 6-bit groups, each group offset by 63. Orders up to
// 62 use a single header byte n+63; 63 and 64 use the 4-byte long form.

namespace qsr {

std::string encode_graph6(const Graph& g);

// Strict decoder: rejects malformed headers, bodies with out-of-range bytes
// or nonzero padding, truncation, trailing bytes, and orders above 64.
Graph decode_graph6(std::string_view text);

}  // namespace qsr
