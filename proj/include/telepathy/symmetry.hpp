#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hamming_graph.hpp"
#include "reference_tables.hpp"
#include "word.hpp"

namespace telepathy {

enum class Block : unsigned { u_only = 0, shared = 1, v_only = 2, outside = 3 };

// Positions of {0..N-1} split by membership in supp(u) and supp(v).
struct BlockPartition {
  unsigned N = 0;
  Word u, v;
  std::array<std::vector<unsigned>, 4> blocks;  // ascending positions

  const std::vector<unsigned>& operator[](Block b) const { return blocks[static_cast<unsigned>(b)]; }
  std::array<unsigned, 4> sizes() const {
    return {static_cast<unsigned>(blocks[0].size()), static_cast<unsigned>(blocks[1].size()),
            static_cast<unsigned>(blocks[2].size()), static_cast<unsigned>(blocks[3].size())};
  }
};

// Per-block weights (U-only, Shared, V-only, Outside) of a third vertex.
struct Profile {
  std::array<unsigned, 4> w{};

  unsigned total() const { return w[0] + w[1] + w[2] + w[3]; }
  friend auto operator<=>(const Profile&, const Profile&) = default;
};

inline std::string to_string(const Profile& p) {
  return "(" + std::to_string(p.w[0]) + "," + std::to_string(p.w[1]) + "," + std::to_string(p.w[2]) + "," +
         std::to_string(p.w[3]) + ")";
}

inline Profile parse_profile(std::string_view s) {
  Profile p;
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') throw parse_error("bad profile '" + std::string(s) + "'");
  std::size_t pos = 1;
  for (unsigned i = 0; i < 4; ++i) {
    std::size_t end = s.find(i == 3 ? ')' : ',', pos);
    if (end == std::string_view::npos || end == pos) throw parse_error("bad profile '" + std::string(s) + "'");
    unsigned val = 0;
    for (std::size_t c = pos; c < end; ++c) {
      if (s[c] < '0' || s[c] > '9') throw parse_error("bad profile '" + std::string(s) + "'");
      val = val * 10 + (s[c] - '0');
    }
    p.w[i] = val;
    pos = end + 1;
  }
  if (pos != s.size()) throw parse_error("bad profile '" + std::string(s) + "'");
  return p;
}

// Position permutation: image[p] is where position p goes.
struct Permutation {
  std::vector<unsigned> image;

  Word apply(Word w) const {
    bits_t out = 0;
    for (unsigned p = 0; p < image.size(); ++p)
      if (w.test(p)) out |= bits_t{1} << image[p];
    return Word(out, w.length());
  }
};

inline BlockPartition block_partition(Word u, Word v) {
  if (u.length() != v.length()) throw usage_error("block partition of words with different length");
  if (u == v) throw usage_error("block partition needs two distinct words");
  BlockPartition p;
  p.N = u.length();
  p.u = u;
  p.v = v;
  for (unsigned i = 0; i < p.N; ++i) {
    bool in_u = u.test(i), in_v = v.test(i);
    Block b = in_u ? (in_v ? Block::shared : Block::u_only) : (in_v ? Block::v_only : Block::outside);
    p.blocks[static_cast<unsigned>(b)].push_back(i);
  }
  return p;
}

inline Profile profile_of(Word w, const BlockPartition& p) {
  Profile q;
  for (unsigned b = 0; b < 4; ++b)
    for (unsigned pos : p.blocks[b]) q.w[b] += w.test(pos);
  return q;
}

inline bool fits(const Profile& q, const BlockPartition& p) {
  auto s = p.sizes();
  for (unsigned b = 0; b < 4; ++b)
    if (q.w[b] > s[b]) return false;
  return true;
}

inline std::uint64_t orbit_size(const Profile& q, const BlockPartition& p) {
  if (!fits(q, p)) throw usage_error("profile " + to_string(q) + " exceeds block sizes");
  auto s = p.sizes();
  std::uint64_t r = 1;
  for (unsigned b = 0; b < 4; ++b) r *= binomial(s[b], q.w[b]);
  return r;
}

// Fills the lowest positions of each block.
inline Word representative(const Profile& q, const BlockPartition& p) {
  if (!fits(q, p)) throw usage_error("profile " + to_string(q) + " exceeds block sizes");
  bits_t bits = 0;
  for (unsigned b = 0; b < 4; ++b)
    for (unsigned i = 0; i < q.w[b]; ++i) bits |= bits_t{1} << p.blocks[b][i];
  return Word(bits, p.N);
}

// u<->v swap: U-only and V-only positions paired element-wise in ascending
// order, Shared and Outside fixed.
inline std::pair<Profile, Permutation> mirror(const Profile& q, const BlockPartition& p) {
  const auto& bu = p[Block::u_only];
  const auto& bv = p[Block::v_only];
  if (bu.size() != bv.size()) throw usage_error("mirror needs |U-only| = |V-only|");
  Permutation perm;
  perm.image.resize(p.N);
  for (unsigned i = 0; i < p.N; ++i) perm.image[i] = i;
  for (std::size_t i = 0; i < bu.size(); ++i) {
    perm.image[bu[i]] = bv[i];
    perm.image[bv[i]] = bu[i];
  }
  Profile m = q;
  std::swap(m.w[0], m.w[2]);
  return {m, perm};
}

struct TypeRecord {
  Profile profile;
  Word representative;
  std::uint64_t orbit_size = 0;
  std::optional<unsigned> listed_index;  // 1-based row in the reference list
  Profile mirror;
  std::optional<Profile> mirror_of;  // set when unlisted but the mirror is listed

  bool listed() const { return listed_index.has_value(); }
  bool self_mirror() const { return mirror == profile; }
};

// Reference list matching a canonical pair's distance (N=16, weight 6 only).
inline std::vector<Profile> reference_profiles(unsigned N, unsigned k, unsigned dist) {
  std::vector<Profile> out;
  if (N != 16 || k != 6) return out;
  auto collect = [&](std::string_view u, std::string_view v, auto const& rows) {
    auto part = block_partition(from_block_string(u), from_block_string(v));
    for (const auto& row : rows) out.push_back(profile_of(from_block_string(row.pattern), part));
  };
  if (dist == 12) collect(reference::d12_u, reference::d12_v, reference::d12_types);
  if (dist == 10) collect(reference::d10_u, reference::d10_v, reference::d10_types);
  return out;
}

// Groups every weight-k word outside {u, v} and not adjacent to either by its
// profile; one record per profile, ordered by profile.
inline std::vector<TypeRecord> enumerate_types(Word u, Word v, unsigned k) {
  const unsigned N = u.length();
  check_length(N);
  if (u.weight() != k || v.weight() != k) throw usage_error("u and v must have weight k");
  const unsigned d = distance(u, v);
  if (d == N / 2) throw usage_error("u and v are adjacent");
  auto part = block_partition(u, v);

  std::map<Profile, std::uint64_t> census;
  for (bits_t w : words_of_weight(N, k)) {
    if (w == u.bits() || w == v.bits()) continue;
    if (hamming(w, u.bits()) == N / 2 || hamming(w, v.bits()) == N / 2) continue;
    ++census[profile_of(Word(w, N), part)];
  }

  auto listed = reference_profiles(N, k, d);
  auto find_listed = [&](const Profile& q) -> std::optional<unsigned> {
    for (unsigned i = 0; i < listed.size(); ++i)
      if (listed[i] == q) return i + 1;
    return std::nullopt;
  };

  std::vector<TypeRecord> out;
  const bool symmetric = part[Block::u_only].size() == part[Block::v_only].size();
  for (const auto& [q, count] : census) {
    TypeRecord t;
    t.profile = q;
    t.representative = representative(q, part);
    t.orbit_size = orbit_size(q, part);
    if (t.orbit_size != count) throw invariant_error("orbit size disagrees with census for " + to_string(q));
    t.listed_index = find_listed(q);
    t.mirror = symmetric ? mirror(q, part).first : q;
    if (!t.listed() && t.mirror != q && find_listed(t.mirror)) t.mirror_of = t.mirror;
    out.push_back(t);
  }
  return out;
}

// Canonical pairs for the level-6 case split.
inline std::pair<Word, Word> canonical_pair(unsigned dist) {
  if (dist == 12) return {Word(0x003f, 16), Word(0x0fc0, 16)};
  if (dist == 10) return {Word(0x003f, 16), Word(0x07e0, 16)};
  throw usage_error("canonical pairs exist for distance 12 and 10 only");
}

}  // namespace telepathy
