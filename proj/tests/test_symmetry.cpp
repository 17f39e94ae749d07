#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>

#include "telepathy/hamming_graph.hpp"
#include "telepathy/reference_tables.hpp"
#include "telepathy/symmetry.hpp"

using namespace telepathy;

namespace {

// Brute-force census of third vertices, keyed by profile.
std::map<Profile, std::uint64_t> census(Word u, Word v) {
  auto part = block_partition(u, v);
  std::map<Profile, std::uint64_t> out;
  for (bits_t w = 0; w < (1U << 16); ++w) {
    if (std::popcount(w) != 6 || w == u.bits() || w == v.bits()) continue;
    if (hamming(w, u.bits()) == 8 || hamming(w, v.bits()) == 8) continue;
    ++out[profile_of(Word(w, 16), part)];
  }
  return out;
}

std::pair<Word, Word> random_pair(unsigned dist, std::mt19937_64& rng) {
  auto level = words_of_weight(16, 6);
  while (true) {
    Word u(level[rng() % level.size()], 16), v(level[rng() % level.size()], 16);
    if (distance(u, v) == dist) return {u, v};
  }
}

}  // namespace

TEST(Blocks, SizesForCanonicalPairs) {
  auto [u12, v12] = canonical_pair(12);
  auto [u10, v10] = canonical_pair(10);
  EXPECT_EQ(block_partition(u12, v12).sizes(), (std::array<unsigned, 4>{6, 0, 6, 4}));
  EXPECT_EQ(block_partition(u10, v10).sizes(), (std::array<unsigned, 4>{5, 1, 5, 5}));
  EXPECT_EQ(from_block_string(reference::d12_u), u12);
  EXPECT_EQ(from_block_string(reference::d12_v), v12);
  EXPECT_EQ(from_block_string(reference::d10_u), u10);
  EXPECT_EQ(from_block_string(reference::d10_v), v10);
  EXPECT_THROW(block_partition(u12, u12), usage_error);
  EXPECT_THROW(canonical_pair(8), usage_error);
}

TEST(Profiles, ProfileAndOrbit) {
  auto [u, v] = canonical_pair(12);
  auto part = block_partition(u, v);
  EXPECT_EQ(to_string(profile_of(Word(0x71c0, 16), part)), "(0,0,3,3)");
  EXPECT_EQ(orbit_size(parse_profile("(0,0,3,3)"), part), 80U);
  EXPECT_EQ(orbit_size(parse_profile("(1,0,3,2)"), part), 720U);
  auto [u10, v10] = canonical_pair(10);
  EXPECT_EQ(orbit_size(parse_profile("(0,1,0,5)"), block_partition(u10, v10)), 1U);
  EXPECT_THROW(orbit_size(parse_profile("(0,1,0,5)"), part), usage_error);
  EXPECT_THROW(parse_profile("(1,2,3)"), parse_error);
}

TEST(Types, CensusMatchesOrbitSizes) {
  for (unsigned dist : {12U, 10U}) {
    auto [u, v] = canonical_pair(dist);
    auto types = enumerate_types(u, v, 6);
    auto brute = census(u, v);
    ASSERT_EQ(types.size(), brute.size());
    EXPECT_EQ(types.size(), dist == 12 ? 14U : 26U);
    std::uint64_t total = 0;
    for (const auto& t : types) {
      EXPECT_EQ(brute.at(t.profile), t.orbit_size) << to_string(t.profile);
      total += t.orbit_size;
    }
    EXPECT_EQ(total, dist == 12 ? 3056U : 2956U);
  }
}

TEST(Types, FeasibilityConstraints) {
  for (unsigned dist : {12U, 10U}) {
    auto [u, v] = canonical_pair(dist);
    auto part = block_partition(u, v);
    for (const auto& t : enumerate_types(u, v, 6)) {
      const auto& w = t.profile.w;
      EXPECT_EQ(t.profile.total(), 6U);
      EXPECT_TRUE(fits(t.profile, part));
      // distance 8 to a weight-6 word means an intersection of exactly 2
      EXPECT_NE(w[0] + w[1], 2U) << to_string(t.profile);
      EXPECT_NE(w[2] + w[1], 2U) << to_string(t.profile);
      EXPECT_EQ(profile_of(t.representative, part), t.profile);
      EXPECT_EQ(t.representative.weight(), 6U);
    }
  }
}

TEST(Types, ListedAndMirrorAccounting) {
  for (unsigned dist : {12U, 10U}) {
    auto [u, v] = canonical_pair(dist);
    auto types = enumerate_types(u, v, 6);
    const std::size_t rows = dist == 12 ? reference::d12_types.size() : reference::d10_types.size();
    std::size_t listed = 0;
    for (const auto& t : types) {
      if (t.listed()) {
        ++listed;
        const auto& row = dist == 12 ? reference::d12_types[*t.listed_index - 1] : reference::d10_types[*t.listed_index - 1];
        EXPECT_EQ(row.a, t.orbit_size) << to_string(t.profile);
      } else {
        // every unlisted profile is the mirror of a listed one
        ASSERT_TRUE(t.mirror_of.has_value()) << to_string(t.profile);
        EXPECT_EQ(*t.mirror_of, t.mirror);
      }
    }
    EXPECT_EQ(listed, rows);
    EXPECT_EQ(listed, dist == 12 ? 8U : 15U);
  }
}

TEST(Mirror, InvolutionAndSoundness) {
  for (unsigned dist : {12U, 10U}) {
    auto [u, v] = canonical_pair(dist);
    auto part = block_partition(u, v);
    for (const auto& t : enumerate_types(u, v, 6)) {
      auto [m, perm] = mirror(t.profile, part);
      EXPECT_EQ(mirror(m, part).first, t.profile);
      EXPECT_EQ(perm.apply(u), v);
      EXPECT_EQ(perm.apply(v), u);
      Word w = t.representative;
      EXPECT_EQ(perm.apply(perm.apply(w)), w);
      EXPECT_EQ(profile_of(perm.apply(w), part), m);
    }
    // the permutation is a graph automorphism fixing {u, v}
    auto perm = mirror(Profile{}, part).second;
    std::mt19937_64 rng(dist);
    auto level = words_of_weight(16, 6);
    for (int i = 0; i < 2000; ++i) {
      Word a(level[rng() % level.size()], 16), b(level[rng() % level.size()], 16);
      ASSERT_EQ(distance(a, b), distance(perm.apply(a), perm.apply(b)));
    }
  }
}

TEST(Types, InvariantUnderAlternativePairs) {
  std::mt19937_64 rng(11);
  for (unsigned dist : {12U, 10U}) {
    auto [u0, v0] = canonical_pair(dist);
    auto base = census(u0, v0);
    for (int trial = 0; trial < 3; ++trial) {
      auto [u, v] = random_pair(dist, rng);
      EXPECT_EQ(census(u, v), base) << "pair " << to_hex(u) << " " << to_hex(v);
      auto types = enumerate_types(u, v, 6);
      EXPECT_EQ(types.size(), base.size());
    }
  }
}

TEST(Types, RejectsBadPairs) {
  Word u(0x00ff & 0x003f, 16);
  EXPECT_THROW(enumerate_types(u, Word(0x0f03, 16), 6), usage_error);  // distance 8
  EXPECT_THROW(enumerate_types(u, Word(0x000f, 16), 6), usage_error);  // wrong weight
}
