#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "locdom/graph.hpp"

namespace locdom::cli {

// Edge-list text is recognised by a first significant line "n <count>";
// anything else is read as graph6 from the first non-empty line.
Graph parse_graph_text(std::string_view text, const std::string& origin);

// `spec` is "-" (read `in`), an existing file path, or a literal graph6
// string. Parse failures are rethrown with the origin prefixed.
Graph load_graph(const std::string& spec, std::istream& in);

std::string read_file(const std::string& path);

}  // namespace locdom::cli
