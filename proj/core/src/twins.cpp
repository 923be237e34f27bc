#include "locdom/twins.hpp"

namespace locdom {

std::vector<TwinPair> find_twins(const Graph& g) {
  std::vector<TwinPair> out;
  const std::size_t n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      // N(u) \ {v} == N(v) \ {u}
      VertexSet nu = g.neighbors(u);
      VertexSet nv = g.neighbors(v);
      const bool adjacent = nu.contains(v);
      nu.erase(v);
      nv.erase(u);
      if (nu == nv) out.push_back({u, v, adjacent ? TwinKind::Closed : TwinKind::Open});
    }
  }
  return out;
}

bool is_twin_free(const Graph& g) {
  if (g.fits_word()) {
    const auto rows = g.row_masks();
    for (std::size_t u = 0; u < rows.size(); ++u) {
      for (std::size_t v = u + 1; v < rows.size(); ++v) {
        const std::uint64_t pair = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
        if ((rows[u] & ~pair) == (rows[v] & ~pair)) return false;
      }
    }
    return true;
  }
  return find_twins(g).empty();
}

}  // namespace locdom
