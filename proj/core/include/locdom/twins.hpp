#pragma once

#include <vector>

#include "locdom/graph.hpp"

namespace locdom {

enum class TwinKind { Open, Closed };

struct TwinPair {
  Vertex u;  // u < v
  Vertex v;
  TwinKind kind;

  friend bool operator==(const TwinPair&, const TwinPair&) = default;
};

// All pairs with N(u) = N(v) (open, non-adjacent) or N[u] = N[v]
// (closed, adjacent), ordered by (u, v).
std::vector<TwinPair> find_twins(const Graph& g);

bool is_twin_free(const Graph& g);

}  // namespace locdom
