#include <fstream>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "locdom/errors.hpp"
#include "locdom/generate.hpp"
#include "locdom/graph6.hpp"
#include "test_graphs.hpp"

using namespace locdom;

// Expected strings were produced once with networkx.to_graph6_bytes
// (tests/oracles/reference.py) and frozen here.
TEST(Graph6, ReferenceEncoderStrings) {
  EXPECT_EQ(encode_graph6(fixtures::p4()), "Ch");
  EXPECT_EQ(encode_graph6(fixtures::k1()), "@");
  EXPECT_EQ(encode_graph6(fixtures::k3()), "Bw");
  EXPECT_EQ(encode_graph6(fixtures::c4()), "Cl");
  EXPECT_EQ(encode_graph6(fixtures::c5()), "Dhc");
  EXPECT_EQ(encode_graph6(fixtures::k2()), "A_");
  EXPECT_EQ(encode_graph6(fixtures::petersen()), "IheA@GUAo");
  EXPECT_EQ(encode_graph6(Graph(0, {})), "?");
}

TEST(Graph6, DecodesReferenceStrings) {
  EXPECT_EQ(decode_graph6("Ch"), fixtures::p4());
  EXPECT_EQ(decode_graph6("@"), fixtures::k1());
  EXPECT_EQ(decode_graph6("Bw"), fixtures::k3());
  EXPECT_EQ(decode_graph6(">>graph6<<Ch\n"), fixtures::p4());
  EXPECT_EQ(decode_graph6("IheA@GUAo"), fixtures::petersen());
}

TEST(Graph6, ExtendedOrderPrefix) {
  std::ifstream in(LOCDOM_TEST_DATA "/path70.g6");
  std::string line;
  ASSERT_TRUE(std::getline(in, line));
  const Graph p70 = generate(GraphKind::Path, 70);
  EXPECT_EQ(encode_graph6(p70), line);
  EXPECT_EQ(decode_graph6(line), p70);
}

namespace {

Errc decode_error(std::string_view text) {
  try {
    decode_graph6(text);
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::AssertionFailure;
}

}  // namespace

TEST(Graph6, MalformedInputs) {
  EXPECT_EQ(decode_error("C\x20"), Errc::MalformedGraph6);  // below 63
  EXPECT_EQ(decode_error("C\x7f"), Errc::MalformedGraph6);  // above 126
  EXPECT_EQ(decode_error("Bx"), Errc::MalformedGraph6);     // padding bit set (111001)
  EXPECT_EQ(decode_error("D"), Errc::MalformedGraph6);      // truncated
  EXPECT_EQ(decode_error("Chh"), Errc::MalformedGraph6);    // trailing data
  EXPECT_EQ(decode_error(""), Errc::MalformedGraph6);
  EXPECT_EQ(decode_error("~??"), Errc::MalformedGraph6);    // truncated prefix
  EXPECT_EQ(decode_error("~???"), Errc::MalformedGraph6);   // 4-byte prefix below 63
}


// decode∘encode is the identity; encode∘decode is canonical.
TEST(Graph6, RoundTripProperty) {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = rng() % 120;
    const Graph g = fixtures::random_graph(rng, n, (rng() % 100) / 100.0);
    const std::string text = encode_graph6(g);
    EXPECT_EQ(decode_graph6(text), g);
    EXPECT_EQ(encode_graph6(decode_graph6(text)), text);
  }
}

TEST(Graph6, EightByteOrderUnsupported) {
  try {
    decode_graph6("~~?@????");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Unsupported);
  }
}
