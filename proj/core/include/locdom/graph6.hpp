#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "locdom/graph.hpp"

namespace locdom {

// Largest order representable with the 4-byte order prefix.
inline constexpr std::size_t kMaxGraph6Order = 258047;

// Accepts an optional ">>graph6<<" header and trailing whitespace.
// Throws Error(MalformedGraph6) on bad characters, nonzero padding,
// truncation or trailing data.
Graph decode_graph6(std::string_view text);

// Canonical encoding without header or newline. Throws Error(Unsupported)
// when the order exceeds kMaxGraph6Order.
std::string encode_graph6(const Graph& g);

}  // namespace locdom
