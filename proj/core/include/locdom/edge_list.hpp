#pragma once

#include <string>
#include <string_view>

#include "locdom/graph.hpp"

namespace locdom {

// Format:
//   # comment lines anywhere
//   n <order>
//   <u> <v>
//   ...
// Errors: MissingOrder, ParseError (with line number), InvalidEdge,
// LoopRejected.
Graph parse_edge_list(std::string_view text);

std::string format_edge_list(const Graph& g);

}  // namespace locdom
