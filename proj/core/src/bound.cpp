#include "locdom/bound.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

#include "kernels.hpp"
#include "locdom/errors.hpp"
#include "locdom/generate.hpp"
#include "locdom/location.hpp"
#include "locdom/twins.hpp"

namespace locdom {

namespace {

[[noreturn]] void broken(const std::string& what) { throw Error(Errc::AssertionFailure, what); }

void require_capacity(const Graph& g, const VertexSet& s, const char* name) {
  if (s.capacity() != g.order()) {
    throw Error(Errc::DomainViolation, std::string(name) + " has capacity " + std::to_string(s.capacity()) +
                                           " but the graph has order " + std::to_string(g.order()));
  }
}

// Candidate ordering for the exact search: larger sum, then larger k, then
// smaller good-set bit pattern.
struct Best {
  std::size_t sum = 0;
  std::size_t k = 0;
  kernel::Mask good = 0;
  bool valid = false;

  bool beats(const Best& o) const {
    if (!o.valid) return valid;
    if (!valid) return false;
    if (sum != o.sum) return sum > o.sum;
    if (k != o.k) return k > o.k;
    return good < o.good;
  }
};

Best scan_range(kernel::Rows rows, std::size_t n, kernel::Mask lo, kernel::Mask hi) {
  const kernel::Mask all = kernel::full_mask(n);
  Best best;
  for (kernel::Mask a = lo; a < hi; ++a) {
    const kernel::Mask comp = all & ~a;
    const std::size_t sum = kernel::count_classes(rows, a, comp) + kernel::count_classes(rows, comp, a);
    if (best.valid && sum < best.sum) continue;
    const kernel::Mask good = kernel::representatives(rows, a, comp);
    const std::size_t k = kernel::count_nontrivial(rows, good, all & ~good);
    const Best cand{sum, k, good, true};
    if (cand.beats(best)) best = cand;
  }
  return best;
}

}  // namespace

ScoredSet score_sum(const Graph& g, const VertexSet& a) {
  require_capacity(g, a, "a");
  ScoredSet out{a, separation_score(g, a), separation_score(g, a.complement()), 0};
  out.sum = out.s_a + out.s_comp;
  return out;
}

VertexSet thinning_move(const Graph& g, const VertexSet& a, const VertexSet& u_class, Vertex u) {
  require_capacity(g, a, "a");
  require_capacity(g, u_class, "u_class");
  if (!u_class.contains(u)) throw Error(Errc::DomainViolation, "u=" + std::to_string(u) + " not in class");
  if (u_class.size() < 2) throw Error(Errc::DomainViolation, "class " + u_class.to_string() + " is trivial");
  if (u_class.intersects(a)) throw Error(Errc::DomainViolation, "class meets a");
  const VertexSet t = trace(g, u, a);
  bool exact = true;
  a.complement().for_each([&](Vertex v) { exact = exact && (trace(g, v, a) == t) == u_class.contains(v); });
  if (!exact) {
    throw Error(Errc::DomainViolation, u_class.to_string() + " is not a class of the " + a.to_string() + "-partition");
  }
  VertexSet moved = u_class;
  moved.erase(u);
  return a | moved;
}

ScoredSet local_search(const Graph& g, const VertexSet& start) {
  ScoredSet cur = score_sum(g, start);
  for (;;) {
    const ClassPartition part = x_partition(g, cur.a, cur.a.complement());
    bool moved = false;
    for (const auto& cls : part.classes) {
      if (cls.size() < 2) continue;
      ScoredSet next = score_sum(g, thinning_move(g, cur.a, cls, *cls.min()));
      if (next.sum > cur.sum) {
        cur = std::move(next);
        moved = true;
        break;
      }
    }
    if (!moved) return cur;
  }
}

std::size_t default_exact_ceiling() {
  constexpr std::size_t kDefault = 20;
  const char* env = std::getenv("LOCDOM_MAX_EXACT");
  if (env == nullptr) return kDefault;
  std::size_t value = 0;
  const std::string_view text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) return kDefault;
  return value;
}

MaxScore max_score_exact(const Graph& g, const ExactOptions& opts) {
  const std::size_t n = g.order();
  if (n > opts.max_order || n >= 63) {
    throw Error(Errc::RefusedScale, "exact S search on n=" + std::to_string(n) + " exceeds ceiling " +
                                        std::to_string(std::min<std::size_t>(opts.max_order, 62)));
  }
  const auto rows = g.row_masks();
  const kernel::Mask total = kernel::Mask{1} << n;
  const unsigned workers =
      static_cast<unsigned>(std::clamp<kernel::Mask>(opts.workers == 0 ? 1 : opts.workers, 1, total));

  std::vector<Best> partial(workers);
  if (workers == 1) {
    partial[0] = scan_range(rows, n, 0, total);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const kernel::Mask lo = total / workers * w;
      const kernel::Mask hi = w + 1 == workers ? total : total / workers * (w + 1);
      pool.emplace_back([&, w, lo, hi] { partial[w] = scan_range(rows, n, lo, hi); });
    }
  }
  Best best;
  for (const auto& p : partial)
    if (p.beats(best)) best = p;

  return {best.sum, VertexSet::from_mask(n, best.good), best.k};
}

VertexSet representatives_of_complement(const Graph& g, const VertexSet& a) {
  require_capacity(g, a, "a");
  return representatives(x_partition(g, a, a.complement())).chosen;
}

bool is_good(const Graph& g, const VertexSet& a, std::size_t s_value) {
  const ScoredSet sc = score_sum(g, a);
  return sc.sum == s_value && sc.s_comp == a.size();
}

VertexSet derive_good_set(const Graph& g, const VertexSet& a, std::size_t s_value) {
  const ScoredSet sc = score_sum(g, a);
  if (sc.sum != s_value) {
    throw Error(Errc::NotMaximal, a.to_string() + " scores " + std::to_string(sc.sum) + ", S=" + std::to_string(s_value));
  }
  VertexSet r = representatives_of_complement(g, a);
  if (!is_good(g, r, s_value)) broken("representatives " + r.to_string() + " of an S-maximal set are not good");
  return r;
}

VertexSet derive_good_set(const Graph& g, const VertexSet& a, const ExactOptions& opts) {
  return derive_good_set(g, a, max_score_exact(g, opts).s_value);
}

VertexSet build_z(const Graph& g, const VertexSet& a, const VertexSet& b) {
  require_capacity(g, a, "a");
  require_capacity(g, b, "b");
  if (b.intersects(a)) throw Error(Errc::DomainViolation, "b meets a");

  const ClassPartition target = x_partition(g, a, b);
  const std::size_t k = target.size();
  std::vector<Vertex> reps;
  for (const auto& cls : target.classes) reps.push_back(*cls.min());

  VertexSet z(g.order());
  while (x_partition(g, z, b).size() < k) {
    // Class members agree on every vertex of a, so one representative per
    // class stands in for the whole class.
    std::optional<Vertex> pick;
    for (std::size_t i = 0; i < k && !pick; ++i) {
      for (std::size_t j = i + 1; j < k && !pick; ++j) {
        if (trace(g, reps[i], z) != trace(g, reps[j], z)) continue;
        (a - z).for_each([&](Vertex cand) {
          if (!pick && g.adjacent(cand, reps[i]) != g.adjacent(cand, reps[j])) pick = cand;
        });
        if (!pick) {
          throw Error(Errc::Infeasible, "no vertex of a separates classes containing " + std::to_string(reps[i]) +
                                            " and " + std::to_string(reps[j]));
        }
      }
    }
    z.insert(*pick);
  }

  if (k >= 1 && z.size() > k - 1) broken("separator " + z.to_string() + " larger than k-1");
  if (x_partition(g, z, b).classes != target.classes) broken("separator partition differs from a-partition of b");
  return z;
}

GoodDecomposition decompose(const Graph& g, const VertexSet& a, std::size_t s_value) {
  if (!is_good(g, a, s_value)) throw Error(Errc::NotGood, a.to_string() + " is not good for S=" + std::to_string(s_value));
  const std::size_t n = g.order();
  GoodDecomposition d{a, VertexSet(n), VertexSet(n), VertexSet(n), 0, VertexSet(n), VertexSet(n), s_value};

  const VertexSet rest = a.complement();
  const ClassPartition part = x_partition(g, a, rest);
  for (const auto& cls : part.classes) {
    if (cls.size() < 2) continue;
    d.b |= cls;
    d.r_b.insert(*cls.min());
    ++d.k;
  }
  d.c = rest - d.b;

  const VertexSet locator = d.r_b | d.c;
  const ClassPartition inner = x_partition(g, locator, locator.complement());
  for (const auto& cls : inner.classes) {
    if (cls.size() >= 2) d.a_prime |= cls & a;
  }

  d.z = build_z(g, a, d.b);
  return d;
}

GoodDecomposition decompose(const Graph& g, const VertexSet& a, const ExactOptions& opts) {
  return decompose(g, a, max_score_exact(g, opts).s_value);
}

std::string_view mode_name(Mode m) noexcept { return m == Mode::Exact ? "exact" : "heuristic"; }

std::string_view candidate_name(CandidateTag t) noexcept {
  switch (t) {
    case CandidateTag::AB: return "a_b";
    case CandidateTag::BC: return "b_c";
    case CandidateTag::AC: return "a_c";
    case CandidateTag::W: return "w";
  }
  return "?";
}

BoundReport candidate_sets(const Graph& g, const GoodDecomposition& d, bool strict) {
  const std::size_t n = g.order();
  const std::size_t b = d.b.size();
  const std::size_t c = d.c.size();
  const std::size_t k = d.k;

  BoundReport report;
  report.mode = strict ? Mode::Exact : Mode::Heuristic;
  report.order = n;
  report.decomposition = d;
  report.candidates = {{
      {CandidateTag::AB, d.a | (d.b - d.r_b)},
      {CandidateTag::BC, d.b | d.c},
      {CandidateTag::AC, d.a | d.c},
      {CandidateTag::W, d.a_prime | d.z | d.r_b | d.c},
  }};
  for (auto& cand : report.candidates) {
    cand.size = cand.set.size();
    cand.locating = is_locating(g, cand.set);
    if (strict && !cand.locating) {
      broken(std::string(candidate_name(cand.tag)) + " set " + cand.set.to_string() + " is not locating");
    }
  }

  if (report.candidates[0].size != n - c - k) broken("|A+B-R_B| != n-c-k");
  if (report.candidates[1].size != b + c) broken("|B+C| != b+c");
  if (report.candidates[2].size != n - b) broken("|A+C| != n-b");
  if (strict && k >= 1 && report.candidates[3].size > c + 3 * k - 1) broken("|W| > c+3k-1");

  const Candidate* best = nullptr;
  for (const auto& cand : report.candidates) {
    if (cand.locating && (best == nullptr || cand.size < best->size)) best = &cand;
  }
  if (best == nullptr) broken("no candidate set is locating");
  report.witness = best->set;
  report.ld_witness = extend_to_dominating(g, report.witness);
  return report;
}

std::int64_t locating_bound(std::size_t n) noexcept {
  const auto num = 5 * static_cast<std::int64_t>(n) - 1;
  return num >= 0 ? num / 8 : -1;
}

std::int64_t ld_bound(std::size_t n) noexcept { return (5 * static_cast<std::int64_t>(n) + 7) / 8; }

namespace {

BoundReport heuristic_run(const Graph& g, const VertexSet& start) {
  const ScoredSet found = local_search(g, start);
  const VertexSet r = representatives_of_complement(g, found.a);
  const GoodDecomposition d = decompose(g, r, score_sum(g, r).sum);
  return candidate_sets(g, d, false);
}

}  // namespace

BoundReport construct_locating(const Graph& g, Mode mode, const ConstructOptions& opts) {
  const std::size_t n = g.order();
  if (n == 0) {
    BoundReport empty;
    empty.mode = mode;
    for (std::size_t i = 0; i < 4; ++i) empty.candidates[i] = {static_cast<CandidateTag>(i), VertexSet(0), 0, true};
    return empty;
  }
  if (!is_twin_free(g)) {
    const auto t = find_twins(g).front();
    throw Error(Errc::TwinsPresent, "vertices " + std::to_string(t.u) + " and " + std::to_string(t.v) + " are twins");
  }

  BoundReport report;
  if (mode == Mode::Exact) {
    const MaxScore ms = max_score_exact(g, opts.exact);
    const GoodDecomposition d = decompose(g, ms.best, ms.s_value);
    if (d.k != ms.k) broken("decomposition k disagrees with search k");
    if (d.a_prime.size() > d.k) broken("|A'| > k for the k-maximal good set");
    report = candidate_sets(g, d, true);
    report.certified = static_cast<std::int64_t>(report.witness.size()) <= locating_bound(n);
  } else {
    SplitMix64 rng(opts.seed);
    VertexSet random_start(n);
    for (Vertex v = 0; v < n; ++v)
      if (rng.next() >> 63) random_start.insert(v);
    report = heuristic_run(g, VertexSet(n));
    BoundReport other = heuristic_run(g, random_start);
    if (other.witness.size() < report.witness.size()) report = std::move(other);
    report.certified = false;
  }
  return report;
}

BoundReport construct_ld(const Graph& g, Mode mode, const ConstructOptions& opts) {
  BoundReport report = construct_locating(g, mode, opts);
  if (g.order() == 0) return report;
  report.ld_witness = extend_to_dominating(g, report.witness);
  report.certified = report.certified && static_cast<std::int64_t>(report.ld_witness.size()) <= ld_bound(g.order());
  return report;
}

}  // namespace locdom
