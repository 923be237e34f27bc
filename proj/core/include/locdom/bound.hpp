#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "locdom/graph.hpp"
#include "locdom/vertex_set.hpp"

namespace locdom {

struct ScoredSet {
  VertexSet a;
  std::size_t s_a = 0;     // s(A)
  std::size_t s_comp = 0;  // s(V \ A)
  std::size_t sum = 0;
};

ScoredSet score_sum(const Graph& g, const VertexSet& a);

// Moves u_class \ {u} into a. u_class must be a non-trivial class of the
// a-partition of V \ a containing u, else Error(DomainViolation).
VertexSet thinning_move(const Graph& g, const VertexSet& a, const VertexSet& u_class, Vertex u);

// Scans the classes of the a-partition of V \ a in order, applies the
// first thinning move (u = class minimum) that strictly raises the score
// sum, and repeats until no class is non-trivial or no move improves.
ScoredSet local_search(const Graph& g, const VertexSet& start);

struct ExactOptions {
  std::size_t max_order = 20;
  unsigned workers = 1;
};

// Exact-mode ceiling, taking LOCDOM_MAX_EXACT from the environment when it
// parses as a number.
std::size_t default_exact_ceiling();

struct MaxScore {
  std::size_t s_value = 0;  // S
  VertexSet best;           // k-maximal good set, ties -> smallest bit pattern
  std::size_t k = 0;        // k(best)
};

// Exhaustive over all 2^n subsets. Throws Error(RefusedScale) above the
// ceiling. The result does not depend on the worker count.
MaxScore max_score_exact(const Graph& g, const ExactOptions& opts = {});

// Representatives of the a-partition of V \ a, with no maximality check.
// The result r always satisfies s(V \ r) = |r|.
VertexSet representatives_of_complement(const Graph& g, const VertexSet& a);

// As above, after checking score_sum(g, a).sum == s_value (else
// Error(NotMaximal)); the goodness equations of the output are verified
// (else Error(AssertionFailure)).
VertexSet derive_good_set(const Graph& g, const VertexSet& a, std::size_t s_value);
// Computes S with max_score_exact first.
VertexSet derive_good_set(const Graph& g, const VertexSet& a, const ExactOptions& opts = {});

bool is_good(const Graph& g, const VertexSet& a, std::size_t s_value);

struct GoodDecomposition {
  VertexSet a;
  VertexSet b;
  VertexSet r_b;
  VertexSet c;
  std::size_t k = 0;
  VertexSet a_prime;
  VertexSet z;
  std::size_t s_value = 0;
};

// Throws Error(NotGood) when a is not good with respect to s_value.
GoodDecomposition decompose(const Graph& g, const VertexSet& a, std::size_t s_value);
GoodDecomposition decompose(const Graph& g, const VertexSet& a, const ExactOptions& opts = {});

// Greedy separator Z ⊆ a whose partition of b matches the a-partition of
// b. Requires b ⊆ V \ a. Throws Error(Infeasible) if no separating vertex
// exists for some merged pair of classes.
VertexSet build_z(const Graph& g, const VertexSet& a, const VertexSet& b);

enum class Mode { Exact, Heuristic };

std::string_view mode_name(Mode m) noexcept;

// A∪(B\R_B), B∪C, A∪C and W = A'∪Z∪R_B∪C, in that order.
enum class CandidateTag { AB, BC, AC, W };

std::string_view candidate_name(CandidateTag t) noexcept;

struct Candidate {
  CandidateTag tag;
  VertexSet set;
  std::size_t size = 0;
  bool locating = false;
};

struct BoundReport {
  Mode mode = Mode::Exact;
  std::size_t order = 0;
  std::optional<GoodDecomposition> decomposition;
  std::array<Candidate, 4> candidates{};
  VertexSet witness;     // smallest locating candidate (first tag on ties)
  VertexSet ld_witness;  // witness extended to a dominating set
  bool certified = false;
};

// The four sets A∪(B\R_B), B∪C, A∪C, A'∪Z∪R_B∪C and their locating
// status. With strict set, a non-locating candidate or a broken size
// identity raises Error(AssertionFailure); otherwise it is only flagged.
BoundReport candidate_sets(const Graph& g, const GoodDecomposition& d, bool strict = true);

struct ConstructOptions {
  ExactOptions exact;
  std::uint64_t seed = 0x1D5EEDULL;  // heuristic random start
};

// Throws Error(TwinsPresent) for graphs with twins.
BoundReport construct_locating(const Graph& g, Mode mode, const ConstructOptions& opts = {});
BoundReport construct_ld(const Graph& g, Mode mode, const ConstructOptions& opts = {});

// floor((5n-1)/8) and ceil(5n/8); the first is -1 at n = 0.
std::int64_t locating_bound(std::size_t n) noexcept;
std::int64_t ld_bound(std::size_t n) noexcept;

}  // namespace locdom
