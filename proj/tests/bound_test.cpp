#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "locdom/bound.hpp"
#include "locdom/errors.hpp"
#include "locdom/generate.hpp"
#include "locdom/location.hpp"
#include "locdom/twins.hpp"
#include "oracles/brute.hpp"
#include "test_graphs.hpp"

using namespace locdom;

namespace {

VertexSet set4(std::initializer_list<Vertex> vs) { return VertexSet(4, vs); }

Errc error_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::AssertionFailure;
}

oracle::Subset to_subset(const VertexSet& s) {
  oracle::Subset out(s.capacity());
  s.for_each([&](Vertex v) { out[v] = true; });
  return out;
}

void expect_decomposition_invariants(const Graph& g, const GoodDecomposition& d) {
  const VertexSet rest = d.a.complement();
  EXPECT_TRUE(is_good(g, d.a, d.s_value));
  EXPECT_EQ(d.c, rest - d.b);
  EXPECT_TRUE(d.r_b.is_subset_of(d.b));
  EXPECT_EQ(d.k, d.r_b.size());
  const ClassPartition part = x_partition(g, d.a, rest);
  std::size_t nontrivial = 0;
  for (const auto& cls : part.classes) {
    if (cls.size() >= 2) {
      ++nontrivial;
      EXPECT_TRUE(cls.is_subset_of(d.b));
      EXPECT_EQ((cls & d.r_b).size(), 1u);
    } else {
      EXPECT_TRUE(cls.is_subset_of(d.c));
    }
  }
  EXPECT_EQ(nontrivial, d.k);
  EXPECT_TRUE(d.a_prime.is_subset_of(d.a));
  EXPECT_TRUE(d.z.is_subset_of(d.a));
  EXPECT_LE(d.z.size(), d.k == 0 ? 0 : d.k - 1);
  EXPECT_EQ(x_partition(g, d.z, d.b).classes, x_partition(g, d.a, d.b).classes);
}

}  // namespace

TEST(ScoreSum, Examples) {
  const Graph g = fixtures::p4();
  const ScoredSet one = score_sum(g, set4({0}));
  EXPECT_EQ(one.s_a, 2u);
  EXPECT_EQ(one.s_comp, 1u);
  EXPECT_EQ(one.sum, 3u);
  EXPECT_EQ(score_sum(g, set4({0, 2})).sum, 4u);
  EXPECT_EQ(score_sum(g, set4({})).sum, 1u);
}

TEST(ThinningMove, Examples) {
  const Graph g = fixtures::p4();
  const VertexSet a = set4({0});
  const VertexSet cls = set4({2, 3});
  const VertexSet moved2 = thinning_move(g, a, cls, 2);
  EXPECT_EQ(moved2, set4({0, 3}));
  EXPECT_EQ(score_sum(g, moved2).sum, 4u);
  EXPECT_EQ(x_partition(g, moved2, moved2.complement()).traces[0], set4({0}));
  EXPECT_EQ(x_partition(g, moved2, moved2.complement()).traces[1], set4({3}));

  const VertexSet moved3 = thinning_move(g, a, cls, 3);
  EXPECT_EQ(moved3, set4({0, 2}));
  EXPECT_EQ(score_sum(g, moved3).sum, 4u);
  EXPECT_EQ(moved3.complement().size(), a.complement().size() - 1);
}

TEST(ThinningMove, Errors) {
  const Graph g = fixtures::p4();
  EXPECT_EQ(error_of([&] { thinning_move(g, set4({0}), set4({1}), 1); }), Errc::DomainViolation);
  EXPECT_EQ(error_of([&] { thinning_move(g, set4({0}), set4({2, 3}), 1); }), Errc::DomainViolation);
  EXPECT_EQ(error_of([&] { thinning_move(g, set4({0}), set4({1, 2}), 1); }), Errc::DomainViolation);
  EXPECT_EQ(error_of([&] { thinning_move(g, set4({0}), set4({2}), 2); }), Errc::DomainViolation);
}

TEST(LocalSearch, Examples) {
  const Graph g = fixtures::p4();
  EXPECT_EQ(local_search(g, set4({0})).sum, 4u);
  const ScoredSet from_empty = local_search(g, set4({}));
  EXPECT_GE(from_empty.sum, 1u);
  EXPECT_LE(from_empty.sum, 4u);
  const ScoredSet fixed = local_search(g, set4({0, 2}));
  EXPECT_EQ(fixed.a, set4({0, 2}));
}

TEST(LocalSearch, NeverDecreases) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 12;
    const Graph g = fixtures::random_graph(rng, n, 0.5);
    const VertexSet start = fixtures::random_subset(rng, n);
    const ScoredSet end = local_search(g, start);
    EXPECT_GE(end.sum, score_sum(g, start).sum);
    EXPECT_LE(end.sum, max_score_exact(g).s_value);
  }
}

TEST(MaxScoreExact, SmallGraphs) {
  EXPECT_EQ(max_score_exact(fixtures::p4()).s_value, 4u);
  EXPECT_EQ(max_score_exact(fixtures::k1()).s_value, 1u);
  const Graph c5 = fixtures::c5();
  const MaxScore ms = max_score_exact(c5);
  EXPECT_EQ(ms.s_value, oracle::best_sum(oracle::matrix(c5)));
  EXPECT_EQ(ms.s_value, 5u);  // tests/oracles/reference.py
  EXPECT_GE(ms.s_value, score_sum(c5, VertexSet(5, {0, 2})).sum);
  EXPECT_EQ(max_score_exact(fixtures::petersen()).s_value, 10u);
}

TEST(MaxScoreExact, RefusesAboveCeiling) {
  const Graph g = generate(GraphKind::Path, 21);
  EXPECT_EQ(error_of([&] { max_score_exact(g); }), Errc::RefusedScale);
  EXPECT_EQ(max_score_exact(g, {.max_order = 21, .workers = 4}).best,
            max_score_exact(g, {.max_order = 21, .workers = 1}).best);
}

// S, goodness and the largest k all match direct enumeration over every
// subset; the worker count does not change the answer.
TEST(MaxScoreExact, MatchesOracleAndIgnoresWorkers) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 9;
    const Graph g = fixtures::random_graph(rng, n, 0.2 + (rng() % 60) / 100.0);
    const auto m = oracle::matrix(g);
    const MaxScore one = max_score_exact(g, {.max_order = 20, .workers = 1});
    EXPECT_EQ(one.s_value, oracle::best_sum(m));
    EXPECT_TRUE(oracle::good(m, to_subset(one.best), one.s_value));
    EXPECT_EQ(one.k, oracle::k_of(m, to_subset(one.best)));
    EXPECT_EQ(one.k, oracle::max_k_over_good_sets(m));
    for (unsigned w : {2u, 3u, 8u}) {
      const MaxScore many = max_score_exact(g, {.max_order = 20, .workers = w});
      EXPECT_EQ(many.s_value, one.s_value);
      EXPECT_EQ(many.best, one.best);
      EXPECT_EQ(many.k, one.k);
    }
  }
}

TEST(DeriveGoodSet, Examples) {
  const Graph g = fixtures::p4();
  const VertexSet r = derive_good_set(g, set4({0, 2}), 4);
  EXPECT_EQ(r, set4({1, 3}));
  EXPECT_TRUE(is_good(g, r, 4));
  EXPECT_TRUE(is_good(g, set4({0, 2}), 4));
  const VertexSet r2 = derive_good_set(g, set4({1, 3}));
  EXPECT_TRUE(is_good(g, r2, 4));
  EXPECT_TRUE(is_locating(g, r2.complement()));
  EXPECT_EQ(error_of([&] { derive_good_set(g, set4({0}), 4); }), Errc::NotMaximal);
}

// The representatives of a good set are good again, of size s(A) = S-|A|.
TEST(DeriveGoodSet, GoodInputs) {
  for (std::size_t n = 1; n <= 5; ++n) {
    all_labeled_graphs(n, [&](const Graph& g) {
      const std::size_t s_value = max_score_exact(g).s_value;
      for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        const VertexSet a = VertexSet::from_mask(n, mask);
        if (!is_good(g, a, s_value)) continue;
        const VertexSet r = derive_good_set(g, a, s_value);
        EXPECT_TRUE(is_good(g, r, s_value));
        EXPECT_EQ(r.size(), s_value - a.size());
      }
    });
  }
}

TEST(Decompose, PathWithTrivialClasses) {
  const Graph g = fixtures::p4();
  const GoodDecomposition d = decompose(g, set4({0, 2}), 4);
  EXPECT_TRUE(d.b.empty());
  EXPECT_EQ(d.c, set4({1, 3}));
  EXPECT_EQ(d.k, 0u);
  EXPECT_TRUE(d.a_prime.empty());
  EXPECT_TRUE(d.z.empty());
  EXPECT_TRUE(d.r_b.empty());
}

TEST(Decompose, RejectsNonGood) {
  EXPECT_EQ(error_of([] { decompose(fixtures::p4(), set4({0}), 4); }), Errc::NotGood);
  EXPECT_EQ(error_of([] { decompose(fixtures::p4(), set4({0})); }), Errc::NotGood);
}

TEST(Decompose, ExactGoodSetsSatisfyInvariants) {
  for (const Graph& g : {fixtures::c5(), fixtures::petersen(), fixtures::p4()}) {
    const MaxScore ms = max_score_exact(g);
    const GoodDecomposition d = decompose(g, ms.best, ms.s_value);
    expect_decomposition_invariants(g, d);
    EXPECT_EQ(d.k, ms.k);
    EXPECT_LE(d.a_prime.size(), d.k);
  }
}

// Twin-free graphs this small always come out with k = 0, so graphs with
// twins are used to reach the B / Z machinery.
TEST(Decompose, SomeGraphHasSeveralClasses) {
  std::size_t best_k = 0;
  all_labeled_graphs(6, [&](const Graph& g) {
    if (best_k >= 2) return;
    const MaxScore ms = max_score_exact(g);
    if (ms.k < 2) return;
    best_k = ms.k;
    const GoodDecomposition d = decompose(g, ms.best, ms.s_value);
    expect_decomposition_invariants(g, d);
    EXPECT_FALSE(d.z.empty());
  });
  EXPECT_GE(best_k, 2u);
}

TEST(BuildZ, DegenerateClassCounts) {
  const Graph g = fixtures::p4();
  EXPECT_TRUE(build_z(g, set4({0, 2}), set4({})).empty());
  // One class: {2,3} under a = {0}.
  EXPECT_TRUE(build_z(g, set4({0}), set4({2, 3})).empty());
  EXPECT_EQ(error_of([&] { build_z(g, set4({0, 2}), set4({2, 3})); }), Errc::DomainViolation);
}

TEST(BuildZ, SeparatesClassesOnRandomInputs) {
  std::mt19937_64 rng(77);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 2 + rng() % 11;
    const Graph g = fixtures::random_graph(rng, n, 0.5);
    const VertexSet a = fixtures::random_subset(rng, n);
    const VertexSet b = fixtures::random_subset(rng, n) - a;
    const std::size_t k = x_partition(g, a, b).size();
    const VertexSet z = build_z(g, a, b);
    EXPECT_TRUE(z.is_subset_of(a));
    EXPECT_LE(z.size(), k == 0 ? 0 : k - 1);
    EXPECT_EQ(x_partition(g, z, b).classes, x_partition(g, a, b).classes);
  }
}

TEST(CandidateSets, PathExample) {
  const Graph g = fixtures::p4();
  const BoundReport r = candidate_sets(g, decompose(g, set4({0, 2}), 4));
  EXPECT_EQ(r.candidates[0].size, 2u);
  EXPECT_EQ(r.candidates[1].size, 2u);
  EXPECT_EQ(r.candidates[2].size, 4u);
  EXPECT_EQ(r.candidates[3].size, 2u);
  EXPECT_EQ(r.witness.size(), 2u);
  EXPECT_EQ(r.candidates[1].set, set4({0, 2}).complement());
  for (const auto& c : r.candidates) EXPECT_TRUE(c.locating);
}

TEST(Construct, Examples) {
  const BoundReport p4 = construct_ld(fixtures::p4(), Mode::Exact);
  EXPECT_EQ(p4.witness.size(), 2u);
  EXPECT_TRUE(p4.certified);
  EXPECT_LE(static_cast<std::int64_t>(p4.ld_witness.size()), ld_bound(4));
  EXPECT_TRUE(is_locating_dominating(fixtures::p4(), p4.ld_witness));

  const BoundReport k1 = construct_ld(fixtures::k1(), Mode::Exact);
  EXPECT_TRUE(k1.witness.empty());
  EXPECT_EQ(k1.ld_witness, VertexSet(1, {0}));
  EXPECT_TRUE(k1.certified);

  const BoundReport c5 = construct_ld(fixtures::c5(), Mode::Exact);
  EXPECT_LE(c5.ld_witness.size(), 4u);
  EXPECT_GE(c5.ld_witness.size(), 2u);  // LD(C5) = 2
  EXPECT_TRUE(c5.certified);
}

TEST(Construct, Bounds) {
  EXPECT_EQ(locating_bound(0), -1);
  EXPECT_EQ(locating_bound(1), 0);
  EXPECT_EQ(locating_bound(4), 2);
  EXPECT_EQ(locating_bound(8), 4);
  EXPECT_EQ(ld_bound(1), 1);
  EXPECT_EQ(ld_bound(4), 3);
  EXPECT_EQ(ld_bound(5), 4);
  EXPECT_EQ(ld_bound(8), 5);
  for (std::size_t n = 1; n < 200; ++n) {
    EXPECT_EQ(ld_bound(n), locating_bound(n) + 1);
    EXPECT_EQ(ld_bound(n), static_cast<std::int64_t>(std::ceil(5.0 * n / 8.0)));
  }
}

TEST(Construct, TwinsAndEmptyGraph) {
  EXPECT_EQ(error_of([] { construct_locating(fixtures::c4(), Mode::Exact); }), Errc::TwinsPresent);
  EXPECT_EQ(error_of([] { construct_ld(fixtures::k2(), Mode::Heuristic); }), Errc::TwinsPresent);
  const BoundReport empty = construct_ld(Graph(0, {}), Mode::Exact);
  EXPECT_TRUE(empty.witness.empty());
  EXPECT_FALSE(empty.decomposition.has_value());
}

TEST(Construct, HeuristicWitnessesLocate) {
  std::mt19937_64 rng(3);
  std::size_t tried = 0;
  while (tried < 100) {
    const std::size_t n = 4 + rng() % 30;
    const Graph g = fixtures::random_graph(rng, n, 0.4);
    if (!is_twin_free(g)) continue;
    ++tried;
    const BoundReport r = construct_ld(g, Mode::Heuristic, {.seed = rng()});
    EXPECT_FALSE(r.certified);
    EXPECT_TRUE(is_locating(g, r.witness));
    EXPECT_TRUE(is_locating_dominating(g, r.ld_witness));
    EXPECT_TRUE(r.candidates[0].locating);
    EXPECT_TRUE(r.candidates[1].locating);
  }
}

// Both non-decrease inequalities of the thinning move on sampled inputs.
TEST(Construct, ThinningSoundnessSample) {
  std::mt19937_64 rng(12);
  int trials = 0;
  while (trials < 2000) {
    const std::size_t n = 2 + rng() % 11;
    const Graph g = fixtures::random_graph(rng, n, 0.5);
    const VertexSet a = fixtures::random_subset(rng, n);
    const ClassPartition part = x_partition(g, a, a.complement());
    std::vector<VertexSet> nontrivial;
    for (const auto& c : part.classes)
      if (c.size() >= 2) nontrivial.push_back(c);
    if (nontrivial.empty()) continue;
    const VertexSet& cls = nontrivial[rng() % nontrivial.size()];
    const auto members = cls.to_vector();
    const Vertex u = members[rng() % members.size()];
    const VertexSet moved = thinning_move(g, a, cls, u);
    EXPECT_GE(separation_score(g, moved), separation_score(g, a));
    EXPECT_GE(separation_score(g, moved.complement()), separation_score(g, a.complement()));
    ++trials;
  }
}
