#include <random>
#include <set>

#include <gtest/gtest.h>

#include "locdom/errors.hpp"
#include "locdom/vertex_set.hpp"

using locdom::Vertex;
using locdom::VertexSet;

TEST(VertexSet, ComplementStaysInsideCapacity) {
  for (std::size_t n : {0u, 1u, 5u, 63u, 64u, 65u, 130u}) {
    const VertexSet full = VertexSet(n).complement();
    EXPECT_EQ(full.size(), n);
    EXPECT_EQ(full, VertexSet::full(n));
    EXPECT_TRUE(full.complement().empty());
  }
}

TEST(VertexSet, FromMaskDropsBitsBeyondCapacity) {
  const VertexSet s = VertexSet::from_mask(3, 0xFF);
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.to_string(), "{0,1,2}");
}

TEST(VertexSet, InsertOutsideCapacityThrows) {
  VertexSet s(4);
  EXPECT_THROW(s.insert(4), locdom::Error);
}

TEST(VertexSet, MixedCapacitiesRejected) {
  EXPECT_THROW((void)(VertexSet(3) | VertexSet(4)), locdom::Error);
}

TEST(VertexSet, OrderIsNumericBitPattern) {
  const VertexSet a(4, {0, 1});  // 0b0011
  const VertexSet b(4, {2});     // 0b0100
  const VertexSet c(4, {0, 2});  // 0b0101
  EXPECT_LT(a, b);
  EXPECT_LT(b, c);
}

// Set algebra agrees with std::set on random multi-word sets.
TEST(VertexSet, AlgebraMatchesStdSet) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 200;
    std::set<Vertex> sa, sb;
    VertexSet a(n), b(n);
    for (Vertex v = 0; v < n; ++v) {
      if (rng() & 1) sa.insert(v), a.insert(v);
      if (rng() & 1) sb.insert(v), b.insert(v);
    }
    std::set<Vertex> inter, uni, diff;
    for (Vertex v = 0; v < n; ++v) {
      if (sa.count(v) && sb.count(v)) inter.insert(v);
      if (sa.count(v) || sb.count(v)) uni.insert(v);
      if (sa.count(v) && !sb.count(v)) diff.insert(v);
    }
    auto as_set = [](const VertexSet& s) {
      auto v = s.to_vector();
      return std::set<Vertex>(v.begin(), v.end());
    };
    EXPECT_EQ(as_set(a & b), inter);
    EXPECT_EQ(as_set(a | b), uni);
    EXPECT_EQ(as_set(a - b), diff);
    EXPECT_EQ((a & b).is_subset_of(a), true);
    EXPECT_EQ(a.intersects(b), !inter.empty());
    if (!sa.empty()) EXPECT_EQ(*a.min(), *sa.begin());
    EXPECT_EQ(a.size(), sa.size());
  }
}
