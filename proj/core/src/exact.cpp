#include "locdom/exact.hpp"

#include <string>

#include "kernels.hpp"
#include "locdom/bound.hpp"
#include "locdom/errors.hpp"

namespace locdom {

namespace {

void check_scale(const Graph& g, std::size_t ceiling, const char* what) {
  if (g.order() > ceiling || g.order() >= 63) {
    throw Error(Errc::RefusedScale, std::string(what) + " on n=" + std::to_string(g.order()) +
                                        " exceeds ceiling " + std::to_string(ceiling));
  }
}

template <class Pred>
OptimumWitness smallest(const Graph& g, OptimumKind kind, Pred&& accepts) {
  const std::size_t n = g.order();
  // Combinations of each size in lexicographic order of the sorted index
  // list: {0,1}, {0,2}, ..., {1,2}, ...
  std::vector<Vertex> idx;
  for (std::size_t r = 0; r <= n; ++r) {
    idx.resize(r);
    for (std::size_t i = 0; i < r; ++i) idx[i] = static_cast<Vertex>(i);
    for (;;) {
      kernel::Mask x = 0;
      for (Vertex v : idx) x |= kernel::Mask{1} << v;
      if (accepts(x)) return {r, VertexSet::from_mask(n, x), kind};
      std::size_t i = r;
      while (i > 0 && idx[i - 1] == n - r + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  // The full vertex set is always locating and dominating.
  throw Error(Errc::AssertionFailure, "no verifying set found");
}

struct RgsSearch {
  kernel::Rows rows;
  std::size_t n;
  std::size_t k;
  kernel::Mask all;
  std::vector<kernel::Mask> blocks;
  std::size_t best = 0;
  bool found = false;
  std::vector<kernel::Mask> best_blocks;

  void run(std::size_t pos, std::size_t used) {
    if (used + (n - pos) < k) return;
    if (pos == n) {
      std::size_t value = 0;
      for (auto blk : blocks) value += kernel::score(rows, blk, all);
      if (!found || value > best) {
        best = value;
        best_blocks = blocks;
        found = true;
      }
      return;
    }
    const std::size_t limit = std::min(used + 1, k);
    for (std::size_t label = 0; label < limit; ++label) {
      blocks[label] |= kernel::Mask{1} << pos;
      run(pos + 1, std::max(used, label + 1));
      blocks[label] &= ~(kernel::Mask{1} << pos);
    }
  }
};

}  // namespace

OptimumWitness min_locating(const Graph& g, const OracleLimits& limits) {
  check_scale(g, limits.max_order, "min_locating");
  const auto rows = g.row_masks();
  const auto all = kernel::full_mask(g.order());
  return smallest(g, OptimumKind::Locating, [&](kernel::Mask x) { return kernel::is_locating(rows, x, all); });
}

OptimumWitness min_locating_dominating(const Graph& g, const OracleLimits& limits) {
  check_scale(g, limits.max_order, "min_locating_dominating");
  const auto rows = g.row_masks();
  const auto all = kernel::full_mask(g.order());
  return smallest(g, OptimumKind::LocatingDominating, [&](kernel::Mask x) {
    return kernel::is_dominating(rows, x, all) && kernel::is_locating(rows, x, all);
  });
}

PartitionWitness two_locating_partition(const Graph& g, const OracleLimits& limits) {
  check_scale(g, limits.max_order, "two_locating_partition");
  const std::size_t n = g.order();
  if (n == 0) return {VertexSet(0), VertexSet(0), true};
  const auto rows = g.row_masks();
  const auto all = kernel::full_mask(n);
  const kernel::Mask count = kernel::Mask{1} << (n - 1);
  for (kernel::Mask t = 0; t < count; ++t) {
    const kernel::Mask y = t << 1;
    const kernel::Mask x = all & ~y;
    if (kernel::is_locating(rows, x, all) && kernel::is_locating(rows, y, all)) {
      return {VertexSet::from_mask(n, x), VertexSet::from_mask(n, y), true};
    }
  }
  return {VertexSet(n), VertexSet(n), false};
}

SkResult s_k_of_graph(const Graph& g, std::size_t k, const OracleLimits& limits) {
  check_scale(g, limits.max_order, "s_k_of_graph");
  const std::size_t n = g.order();
  if (k < 1 || k > n) {
    throw Error(Errc::InvalidParameter, "k=" + std::to_string(k) + " outside 1.." + std::to_string(n));
  }
  RgsSearch search{g.row_masks(), n, k, kernel::full_mask(n), std::vector<kernel::Mask>(k, 0), 0, false, {}};
  search.run(0, 0);

  SkResult out{k, search.best, {}};
  for (auto blk : search.best_blocks) out.witness_partition.push_back(VertexSet::from_mask(n, blk));
  return out;
}

std::size_t max_s2(const Graph& g, std::size_t max_order) {
  return max_score_exact(g, {.max_order = max_order, .workers = 1}).s_value;
}

}  // namespace locdom
