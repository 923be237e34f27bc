#include "locdom/graph6.hpp"

#include <string>
#include <vector>

#include "locdom/errors.hpp"

namespace locdom {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

[[noreturn]] void malformed(const std::string& why) { throw Error(Errc::MalformedGraph6, why); }

int sextet(char ch, std::size_t pos) {
  const auto c = static_cast<unsigned char>(ch);
  if (c < 63 || c > 126) malformed("character code " + std::to_string(c) + " at offset " + std::to_string(pos));
  return c - 63;
}

}  // namespace

Graph decode_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t')) {
    text.remove_suffix(1);
  }
  if (text.empty()) malformed("empty input");

  std::size_t pos = 0;
  std::size_t n = 0;
  const int first = sextet(text[pos++], 0);
  if (first < 63) {
    n = static_cast<std::size_t>(first);
  } else {
    if (text.size() < 4) malformed("truncated order prefix");
    if (text[1] == '~') throw Error(Errc::Unsupported, "8-byte order prefix exceeds supported range");
    for (int i = 0; i < 3; ++i) n = (n << 6) | static_cast<std::size_t>(sextet(text[pos], pos)), ++pos;
    if (n < 63) malformed("non-canonical 4-byte order prefix for n=" + std::to_string(n));
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t chars = (bits + 5) / 6;
  if (text.size() - pos < chars) malformed("truncated adjacency data");
  if (text.size() - pos > chars) malformed("trailing data after adjacency bits");

  std::vector<Edge> edges;
  std::size_t bit = 0;
  Vertex i = 0;
  Vertex j = 1;
  for (std::size_t c = 0; c < chars; ++c) {
    const int value = sextet(text[pos + c], pos + c);
    for (int b = 5; b >= 0; --b, ++bit) {
      const bool set = (value >> b) & 1;
      if (bit >= bits) {
        if (set) malformed("nonzero padding bit");
        continue;
      }
      if (set) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) {
    throw Error(Errc::Unsupported, "order " + std::to_string(n) + " exceeds graph6 4-byte limit");
  }
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    const VertexSet& row = g.neighbors(j);
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (row.contains(i) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace locdom
