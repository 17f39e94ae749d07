#include <gtest/gtest.h>

#include <random>

#include "telepathy/hamming_graph.hpp"
#include "telepathy/word.hpp"

using namespace telepathy;

namespace {

unsigned naive_distance(bits_t a, bits_t b, unsigned len) {
  unsigned d = 0;
  for (unsigned i = 0; i < len; ++i) d += ((a >> i) & 1U) != ((b >> i) & 1U);
  return d;
}

}  // namespace

TEST(Word, DistanceAndComplement) {
  Word a(0x003f, 16), b(0x0fc0, 16);
  EXPECT_EQ(distance(a, b), 12U);
  EXPECT_EQ(distance(a, Word(0x07e0, 16)), 10U);
  EXPECT_EQ(complement(a).bits(), 0xffc0U);
  EXPECT_EQ(complement(complement(a)), a);
  EXPECT_EQ(distance(a, complement(a)), 16U);
  EXPECT_THROW(distance(Word(1, 8), Word(1, 16)), usage_error);
  EXPECT_THROW(Word(0x100, 8), usage_error);
}

TEST(Word, HexRoundTrip) {
  EXPECT_EQ(to_hex(Word(0x71c0, 16)), "71c0");
  EXPECT_EQ(to_hex(Word(0x3, 2)), "3");
  EXPECT_EQ(parse_hex("0fc0", 16).bits(), 0x0fc0U);
  EXPECT_THROW(parse_hex("1ffff", 16), std::exception);
  EXPECT_EQ(from_block_string("1110 0000 0000 0000").bits(), 0x7U);
}

TEST(Word, WeightEnumerationMatchesBinomial) {
  for (unsigned k = 0; k <= 16; ++k) {
    auto ws = words_of_weight(16, k);
    EXPECT_EQ(ws.size(), binomial(16, k)) << "k=" << k;
    for (std::size_t i = 1; i < ws.size(); ++i) ASSERT_LT(ws[i - 1], ws[i]);
  }
}

TEST(Word, ComplementIdentityOnRandomPairs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10000; ++i) {
    bits_t x = rng() & 0xffff, y = rng() & 0xffff;
    Word a(x, 16), b(y, 16);
    ASSERT_EQ(distance(a, b), naive_distance(x, y, 16));
    ASSERT_EQ(distance(complement(a), b), 16 - distance(a, b));
    ASSERT_EQ(distance(a, b) == 8, distance(complement(a), b) == 8);
  }
}

TEST(Graph, LevelSixDegree) {
  auto g = build_level_graph(16, 6);
  ASSERT_EQ(g.size(), 8008U);
  // brute force for the first vertex
  std::size_t deg = 0;
  for (bits_t w : words_of_weight(16, 6)) deg += naive_distance(w, g.vertices[0].bits(), 16) == 8;
  EXPECT_EQ(deg, 3150U);
  for (std::size_t i = 0; i < g.size(); i += 997) EXPECT_EQ(g.adjacency.degree(i), 3150U);
}

TEST(Graph, SurvivorCount) {
  auto g = build_level_graph(16, 6);
  Word u(0x003f, 16), v(0x0fc0, 16);
  auto s = survivor_subgraph(g, {u, v});
  std::size_t expect = 0;
  for (bits_t w : words_of_weight(16, 6))
    if (w != u.bits() && w != v.bits() && naive_distance(w, u.bits(), 16) != 8 && naive_distance(w, v.bits(), 16) != 8)
      ++expect;
  EXPECT_EQ(expect, 3056U);
  EXPECT_EQ(s.size(), expect);
  EXPECT_THROW(survivor_subgraph(g, {Word(0x1, 16)}), usage_error);
}

TEST(Graph, ParityClassesAreEdgeFree) {
  for (unsigned N : {4U, 8U, 16U}) {
    auto full_count = std::size_t{0};
    for (bits_t x = 0; x < (1U << N); x += (N == 16 ? 37 : 1))
      for (bits_t z : words_of_weight(N, N / 2)) {
        ASSERT_EQ(std::popcount(x) % 2, std::popcount(x ^ z) % 2);
        ++full_count;
      }
    EXPECT_GT(full_count, 0U);
  }
}

TEST(Graph, LevelSizesAndEdges) {
  auto g4 = build_level_graph(8, 2);
  EXPECT_EQ(g4.size(), 28U);
  // two 2-sets at distance 4 are disjoint
  EXPECT_EQ(g4.adjacency.edge_count(), 28U * 15 / 2);
  auto g1 = build_level_graph(16, 1);
  EXPECT_EQ(g1.adjacency.edge_count(), 0U);
  auto full = build_full_graph(4);
  EXPECT_EQ(full.size(), 16U);
  EXPECT_EQ(full.adjacency.edge_count(), 16U * 6 / 2);
  EXPECT_THROW(build_level_graph(12, 3), usage_error);
  EXPECT_THROW(build_component_graph(2, 0), usage_error);
}
