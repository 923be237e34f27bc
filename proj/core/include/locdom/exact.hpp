#pragma once

#include <cstddef>
#include <vector>

#include "locdom/graph.hpp"
#include "locdom/vertex_set.hpp"

namespace locdom {

enum class OptimumKind { Locating, LocatingDominating };

struct OptimumWitness {
  std::size_t size = 0;
  VertexSet witness;
  OptimumKind kind = OptimumKind::Locating;
};

struct OracleLimits {
  std::size_t max_order = 16;
};

// Increasing cardinality, lexicographic (sorted vertex list) order within a
// cardinality; the first verifying set is returned.
OptimumWitness min_locating(const Graph& g, const OracleLimits& limits = {});
OptimumWitness min_locating_dominating(const Graph& g, const OracleLimits& limits = {});

struct PartitionWitness {
  VertexSet x;
  VertexSet y;
  bool found = false;
};

// Vertex 0 stays in x; y runs over subsets of {1..n-1} in increasing bit
// pattern order.
PartitionWitness two_locating_partition(const Graph& g, const OracleLimits& limits = {20});

struct SkResult {
  std::size_t k = 0;
  std::size_t value = 0;
  std::vector<VertexSet> witness_partition;
};

// Maximum of Σ s(A_i) over partitions into exactly k non-empty blocks,
// enumerated as restricted-growth strings in lexicographic order; the
// first maximum is kept. Throws Error(InvalidParameter) unless 1 <= k <= n.
SkResult s_k_of_graph(const Graph& g, std::size_t k, const OracleLimits& limits = {10});

// max over all A (including ∅ and V) of s(A) + s(V \ A).
std::size_t max_s2(const Graph& g, std::size_t max_order = 20);

}  // namespace locdom
