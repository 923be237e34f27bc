#include "locdom/edge_list.hpp"

#include <charconv>
#include <optional>
#include <vector>

#include "locdom/errors.hpp"

namespace locdom {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t to_count(std::string_view tok, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": '" + std::string(tok) +
                                      "' is not a non-negative integer");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::size_t> order;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = strip(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto toks = tokens(line);
    if (!order) {
      if (toks.size() != 2 || toks[0] != "n") {
        throw Error(Errc::MissingOrder, "line " + std::to_string(line_no) + ": expected 'n <count>' header");
      }
      order = to_count(toks[1], line_no);
      continue;
    }
    if (toks.size() != 2) {
      throw Error(Errc::ParseError, "line " + std::to_string(line_no) + ": expected two vertex indices");
    }
    const auto u = to_count(toks[0], line_no);
    const auto v = to_count(toks[1], line_no);
    if (u >= *order || v >= *order) {
      throw Error(Errc::InvalidEdge, "line " + std::to_string(line_no) + ": edge (" + std::to_string(u) + "," +
                                         std::to_string(v) + ") outside order " + std::to_string(*order));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!order) throw Error(Errc::MissingOrder, "no 'n <count>' header found");
  return Graph(*order, edges);
}

std::string format_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace locdom
