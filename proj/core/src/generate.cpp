#include "locdom/generate.hpp"

#include <string>
#include <vector>

#include "locdom/errors.hpp"

namespace locdom {

std::uint64_t SplitMix64::next_below(std::uint64_t bound) noexcept {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

std::optional<GraphKind> parse_graph_kind(std::string_view name) {
  if (name == "path") return GraphKind::Path;
  if (name == "cycle") return GraphKind::Cycle;
  if (name == "complete") return GraphKind::Complete;
  if (name == "gnp") return GraphKind::Gnp;
  return std::nullopt;
}

Graph generate(GraphKind kind, std::size_t n, std::optional<double> p, std::uint64_t seed) {
  std::vector<Edge> edges;
  switch (kind) {
    case GraphKind::Path:
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      break;
    case GraphKind::Cycle:
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      if (n >= 3) edges.emplace_back(static_cast<Vertex>(n - 1), 0);
      break;
    case GraphKind::Complete:
      for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) edges.emplace_back(i, j);
      break;
    case GraphKind::Gnp: {
      if (!p) throw Error(Errc::InvalidParameter, "gnp requires an edge probability");
      if (!(*p >= 0.0 && *p <= 1.0)) {
        throw Error(Errc::InvalidParameter, "edge probability " + std::to_string(*p) + " outside [0,1]");
      }
      SplitMix64 rng(seed);
      for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i)
          if (rng.next_unit() < *p) edges.emplace_back(i, j);
      break;
    }
  }
  return Graph(n, edges);
}

std::uint64_t labeled_graph_count(std::size_t n) {
  const std::size_t pairs = n < 2 ? 0 : n * (n - 1) / 2;
  if (pairs >= 64) throw Error(Errc::RefusedScale, "2^" + std::to_string(pairs) + " labeled graphs");
  return std::uint64_t{1} << pairs;
}

Graph labeled_graph(std::size_t n, std::uint64_t index) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit)
      if (bit < 64 && (index >> bit & 1)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

void all_labeled_graphs(std::size_t n, const std::function<void(const Graph&)>& sink, bool allow_large) {
  if (n > kMaxLabeledOrder && !allow_large) {
    throw Error(Errc::RefusedScale, "all_labeled_graphs(" + std::to_string(n) + ") exceeds n <= " +
                                        std::to_string(kMaxLabeledOrder));
  }
  const std::uint64_t count = labeled_graph_count(n);
  for (std::uint64_t index = 0; index < count; ++index) sink(labeled_graph(n, index));
}

}  // namespace locdom
