#include "locdom/location.hpp"

#include <string>
#include <unordered_map>

#include "kernels.hpp"
#include "locdom/errors.hpp"

namespace locdom {

std::size_t ClassPartition::nontrivial_count() const noexcept {
  std::size_t out = 0;
  for (const auto& cls : classes) out += cls.size() >= 2;
  return out;
}

VertexSet trace(const Graph& g, Vertex v, const VertexSet& x) { return g.neighbors(v) & x; }

ClassPartition x_partition(const Graph& g, const VertexSet& x, const VertexSet& y) {
  if (y.intersects(x)) {
    throw Error(Errc::DomainViolation, "ground set " + y.to_string() + " meets partitioning set " + x.to_string());
  }
  ClassPartition part{y, {}, {}};
  std::unordered_map<VertexSet, std::size_t> index;
  // Vertices arrive in increasing order, so classes end up ordered by
  // their minimum member.
  y.for_each([&](Vertex v) {
    VertexSet t = trace(g, v, x);
    auto [it, inserted] = index.try_emplace(t, part.classes.size());
    if (inserted) {
      part.classes.emplace_back(g.order());
      part.traces.push_back(std::move(t));
    }
    part.classes[it->second].insert(v);
  });
  return part;
}

std::size_t separation_score(const Graph& g, const VertexSet& a) {
  if (g.fits_word()) {
    return kernel::score(g.row_masks(), a.low_word(), kernel::full_mask(g.order()));
  }
  return x_partition(g, a, a.complement()).size();
}

bool distinguishes(const Graph& g, Vertex x, Vertex v, Vertex v2) {
  const std::size_t n = g.order();
  if (x >= n || v >= n || v2 >= n) throw Error(Errc::DomainViolation, "vertex outside graph");
  if (v == v2 || x == v || x == v2) {
    throw Error(Errc::DomainViolation, "distinguishes needs distinct v, v2 and x outside both");
  }
  return g.adjacent(x, v) != g.adjacent(x, v2);
}

bool is_locating(const Graph& g, const VertexSet& x) {
  if (g.fits_word()) return kernel::is_locating(g.row_masks(), x.low_word(), kernel::full_mask(g.order()));
  const VertexSet rest = x.complement();
  return x_partition(g, x, rest).size() == rest.size();
}

bool is_dominating(const Graph& g, const VertexSet& x) {
  if (g.fits_word()) return kernel::is_dominating(g.row_masks(), x.low_word(), kernel::full_mask(g.order()));
  bool ok = true;
  x.complement().for_each([&](Vertex v) { ok = ok && g.neighbors(v).intersects(x); });
  return ok;
}

bool is_locating_dominating(const Graph& g, const VertexSet& x) { return is_locating(g, x) && is_dominating(g, x); }

VertexSet extend_to_dominating(const Graph& g, const VertexSet& x) {
  if (!is_locating(g, x)) throw Error(Errc::PreconditionViolated, x.to_string() + " is not locating");
  VertexSet out = x;
  const VertexSet rest = x.complement();
  std::optional<Vertex> missing;
  rest.for_each([&](Vertex v) {
    if (!missing && !g.neighbors(v).intersects(x)) missing = v;
  });
  if (missing) out.insert(*missing);
  return out;
}

Representatives representatives(const ClassPartition& part) {
  Representatives reps{VertexSet(part.ground.capacity())};
  for (const auto& cls : part.classes) {
    if (auto v = cls.min()) reps.chosen.insert(*v);
  }
  return reps;
}

}  // namespace locdom
