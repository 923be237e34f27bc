#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "locdom/vertex_set.hpp"

namespace locdom {

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph on vertices 0..n-1 with bit-packed
// adjacency rows. Rows are symmetric and loop-free.
class Graph {
 public:
  Graph() = default;
  // Throws Error(InvalidEdge) for endpoints >= n and Error(LoopRejected)
  // for (v, v). Duplicate and reversed pairs collapse.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  const VertexSet& neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adj_[u].contains(v); }

  VertexSet empty_set() const { return VertexSet(n_); }
  VertexSet vertices() const { return VertexSet::full(n_); }

  // Edges (u,v) with u < v, ordered by v then u.
  std::vector<Edge> edges() const;

  // Graphs up to 64 vertices also keep each row as a single word; the
  // search kernels work on these.
  static constexpr std::size_t kWordOrder = 64;
  bool fits_word() const noexcept { return n_ <= kWordOrder; }
  std::span<const std::uint64_t> row_masks() const noexcept { return masks_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::uint64_t> masks_;
};

}  // namespace locdom
