#pragma once

#include <cstddef>
#include <vector>

#include "locdom/graph.hpp"
#include "locdom/vertex_set.hpp"

namespace locdom {

// The X-partition of a ground set Y: Y split into classes of vertices with
// equal trace N(y) ∩ X. Classes are ordered by their minimum member.
struct ClassPartition {
  VertexSet ground;
  std::vector<VertexSet> classes;
  std::vector<VertexSet> traces;  // traces[i] is shared by all of classes[i]

  std::size_t size() const noexcept { return classes.size(); }
  std::size_t nontrivial_count() const noexcept;
};

// One vertex per class of a ClassPartition: always the class minimum.
struct Representatives {
  VertexSet chosen;
};

VertexSet trace(const Graph& g, Vertex v, const VertexSet& x);

// Requires y ⊆ V \ x, else Error(DomainViolation).
ClassPartition x_partition(const Graph& g, const VertexSet& x, const VertexSet& y);

// s(A): number of classes of the A-partition of V \ A.
std::size_t separation_score(const Graph& g, const VertexSet& a);

// True iff x is adjacent to exactly one of v, v2. Requires v != v2 and
// x ∉ {v, v2}, else Error(DomainViolation).
bool distinguishes(const Graph& g, Vertex x, Vertex v, Vertex v2);

// Vacuously true when |V \ x| <= 1.
bool is_locating(const Graph& g, const VertexSet& x);
bool is_dominating(const Graph& g, const VertexSet& x);
bool is_locating_dominating(const Graph& g, const VertexSet& x);

// Adds the (unique, if any) outside vertex with empty trace. Throws
// Error(PreconditionViolated) when x is not locating.
VertexSet extend_to_dominating(const Graph& g, const VertexSet& x);

Representatives representatives(const ClassPartition& part);

}  // namespace locdom
