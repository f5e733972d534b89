#pragma once

#include <string>
#include <string_view>

#include "pdiv/graph.hpp"

namespace pdiv {

// graph6 restricted to the single-byte size field (n <= 62): the byte 63+n,
// then the upper triangle in column order (0,1),(0,2),(1,2),(0,3),... packed
// six bits per byte, most significant first, each byte offset by 63.

std::string encode_graph6(const Graph& g);

/// Accepts an optional trailing '\n' or "\r\n". Throws malformed-line or
/// unsupported-size.
Graph decode_graph6(std::string_view line);

}  // namespace pdiv
