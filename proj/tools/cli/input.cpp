#include "cli/input.hpp"

#include <filesystem>
#include <fstream>
#include <iterator>
#include <sstream>

#include "locdom/edge_list.hpp"
#include "locdom/errors.hpp"
#include "locdom/graph6.hpp"

namespace locdom::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph parse_graph_text(std::string_view text, const std::string& origin) {
  std::size_t line_no = 0;
  std::string_view rest = text;
  while (!rest.empty()) {
    const auto nl = rest.find('\n');
    const std::string_view line = trim(rest.substr(0, nl));
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    try {
      if (line.starts_with("n ") || line.starts_with("n\t")) return parse_edge_list(text);
      return decode_graph6(line);
    } catch (const Error& e) {
      const std::string where = line.starts_with("n ") ? origin : origin + ":" + std::to_string(line_no);
      throw Error(e.code(), where + ": " + e.what());
    }
  }
  throw Error(Errc::ParseError, origin + ": no graph found");
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw Error(Errc::ParseError, "cannot open " + path);
  return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

Graph load_graph(const std::string& spec, std::istream& in) {
  if (spec == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_graph_text(buf.str(), "<stdin>");
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(spec, ec)) return parse_graph_text(read_file(spec), spec);
  return parse_graph_text(spec, "<argument>");
}

}  // namespace locdom::cli
