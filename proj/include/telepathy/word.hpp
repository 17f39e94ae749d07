#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace telepathy {

using bits_t = std::uint32_t;

constexpr bool is_power_of_two(unsigned x) { return x != 0 && (x & (x - 1)) == 0; }

constexpr bits_t low_mask(unsigned length) {
  return length >= 32 ? ~bits_t{0} : (bits_t{1} << length) - 1;
}

// Raw Hamming distance on bit patterns.
constexpr unsigned hamming(bits_t a, bits_t b) { return std::popcount(a ^ b); }

inline std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// An N-bit question / vertex. Position i is the coefficient of 2^i; when
// transcribing block strings, the leftmost character is position 0.
class Word {
 public:
  constexpr Word() = default;
  Word(bits_t bits, unsigned length) : bits_(bits), length_(length) {
    if (length < 1 || length > 32) throw usage_error("word length must be in [1, 32]");
    if ((bits & ~low_mask(length)) != 0) throw usage_error("word has bits set beyond its length");
  }

  constexpr bits_t bits() const { return bits_; }
  constexpr unsigned length() const { return length_; }
  constexpr unsigned weight() const { return std::popcount(bits_); }
  constexpr bool test(unsigned pos) const { return (bits_ >> pos) & 1U; }

  friend constexpr bool operator==(Word, Word) = default;
  friend constexpr auto operator<=>(Word a, Word b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.bits_ <=> b.bits_;
  }

 private:
  bits_t bits_ = 0;
  unsigned length_ = 0;
};

// Game parameters: answers have n bits, questions have N = 2^n bits.
struct GameSize {
  unsigned n;
  unsigned N;

  explicit GameSize(unsigned answer_bits) : n(answer_bits), N(1U << answer_bits) {
    if (answer_bits < 1 || answer_bits > 5) throw usage_error("game size n must be in [1, 5]");
  }
};

inline unsigned distance(Word a, Word b) {
  if (a.length() != b.length()) throw usage_error("distance between words of different length");
  return hamming(a.bits(), b.bits());
}

inline Word complement(Word a) { return Word(~a.bits() & low_mask(a.length()), a.length()); }

// Zero-padded lowercase hex, ceil(N/4) digits.
inline std::string to_hex(bits_t bits, unsigned length) {
  static constexpr char digits[] = "0123456789abcdef";
  unsigned n = length < 4 ? 1 : (length + 3) / 4;
  std::string s(n, '0');
  for (unsigned i = 0; i < n; ++i) s[n - 1 - i] = digits[(bits >> (4 * i)) & 0xF];
  return s;
}

inline std::string to_hex(Word w) { return to_hex(w.bits(), w.length()); }

inline Word parse_hex(std::string_view text, unsigned length) {
  if (text.empty() || text.size() > 8) throw parse_error("bad hex word '" + std::string(text) + "'");
  bits_t v = 0;
  for (char c : text) {
    unsigned d;
    if (c >= '0' && c <= '9') d = c - '0';
    else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
    else if (c >= 'A' && c <= 'F') d = c - 'A' + 10;
    else throw parse_error("bad hex word '" + std::string(text) + "'");
    v = (v << 4) | d;
  }
  if ((v & ~low_mask(length)) != 0) throw parse_error("hex word '" + std::string(text) + "' exceeds length");
  return Word(v, length);
}

// Transcribes a block string such as "000000.111000.1110" (separators '.',
// ' ' and U+00B7 are skipped); the first character becomes position 0.
inline Word from_block_string(std::string_view s) {
  bits_t v = 0;
  unsigned pos = 0;
  for (char c : s) {
    if (c == '0' || c == '1') {
      if (pos >= 32) throw parse_error("block string too long");
      if (c == '1') v |= bits_t{1} << pos;
      ++pos;
    }
  }
  return Word(v, pos);
}

// All weight-k words of the given length, ascending.
inline std::vector<bits_t> words_of_weight(unsigned length, unsigned k) {
  std::vector<bits_t> out;
  if (k > length) return out;
  out.reserve(binomial(length, k));
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  // Gosper's hack walks same-weight patterns in increasing order.
  std::uint64_t x = (std::uint64_t{1} << k) - 1;
  const std::uint64_t limit = std::uint64_t{1} << length;
  while (x < limit) {
    out.push_back(static_cast<bits_t>(x));
    std::uint64_t c = x & (~x + 1);
    std::uint64_t r = x + c;
    x = (((r ^ x) >> 2) / c) | r;
  }
  return out;
}

}  // namespace telepathy
