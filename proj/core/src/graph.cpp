#include "locdom/graph.hpp"

#include <string>

#include "locdom/errors.hpp"

namespace locdom {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n), adj_(n, VertexSet(n)) {
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(Errc::InvalidEdge, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                         ") has an endpoint outside 0.." +
                                         (n == 0 ? std::string("(empty)") : std::to_string(n - 1)));
    }
    if (u == v) throw Error(Errc::LoopRejected, "loop at vertex " + std::to_string(u));
    if (!adj_[u].contains(v)) ++m_;
    adj_[u].insert(v);
    adj_[v].insert(u);
  }
  if (fits_word()) {
    masks_.reserve(n);
    for (const auto& row : adj_) masks_.push_back(row.low_word());
  }
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex v = 0; v < n_; ++v) {
    for (Vertex u = 0; u < v; ++u) {
      if (adj_[v].contains(u)) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace locdom
