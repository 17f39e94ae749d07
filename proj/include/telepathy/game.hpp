#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "word.hpp"

namespace telepathy {

struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  static Fraction reduced(std::uint64_t n, std::uint64_t d) {
    auto g = std::gcd(n, d);
    return g ? Fraction{n / g, d / g} : Fraction{0, 1};
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Fraction&, const Fraction&) = default;
  // Exact comparison via cross-multiplication (operands stay below 2^40 here).
  friend bool operator<(const Fraction& a, const Fraction& b) { return a.num * b.den < b.num * a.den; }
};

inline std::string to_string(const Fraction& f) { return std::to_string(f.num) + "/" + std::to_string(f.den); }

enum class Verdict { win, lose };

inline void check_game_length(unsigned N) {
  if (!is_power_of_two(N) || N < 2 || N > 16) throw usage_error("game supports N in {2, 4, 8, 16}");
}

inline unsigned answer_bits(unsigned N) { return static_cast<unsigned>(std::countr_zero(N)); }

// Win iff (y_A = y_B) <=> (x_A = x_B); questions must be equal or at distance N/2.
inline Verdict referee(Word xa, Word xb, unsigned ya, unsigned yb, unsigned n) {
  if (n < 1 || n > 5 || xa.length() != (1U << n) || xb.length() != (1U << n))
    throw usage_error("questions must have 2^n bits");
  if (ya >= (1U << n) || yb >= (1U << n)) throw usage_error("answers must have n bits");
  unsigned d = distance(xa, xb);
  if (d != 0 && d != xa.length() / 2)
    throw promise_violation("questions " + to_hex(xa) + ", " + to_hex(xb) + " are at distance " + std::to_string(d));
  return ((ya == yb) == (xa == xb)) ? Verdict::win : Verdict::lose;
}

// z = x_A xor x_B over all promised pairs: 0 first, then weight-N/2 words ascending.
inline std::vector<Word> promise_classes(unsigned N) {
  check_game_length(N);
  std::vector<Word> out{Word(0, N)};
  for (bits_t z : words_of_weight(N, N / 2)) out.emplace_back(z, N);
  return out;
}

// Deterministic answer tables indexed by question bits.
struct Strategy {
  unsigned n = 0;
  std::vector<std::uint8_t> alice, bob;

  unsigned N() const { return 1U << n; }
};

struct Coloring {
  unsigned N = 0;
  std::vector<std::uint32_t> color;  // indexed by vertex bits
  unsigned colors = 0;               // 1 + largest color id
};

struct WinRate {
  std::uint64_t wins_equal = 0, cases_equal = 0;
  std::uint64_t wins_distinct = 0, cases_distinct = 0;

  Fraction overall() const { return Fraction::reduced(wins_equal + wins_distinct, cases_equal + cases_distinct); }
  Fraction equal() const { return Fraction::reduced(wins_equal, cases_equal); }
  Fraction distinct() const { return Fraction::reduced(wins_distinct, cases_distinct); }
  bool perfect() const { return wins_equal == cases_equal && wins_distinct == cases_distinct; }
};

struct EvalMode {
  bool exhaustive = true;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  unsigned jobs = 1;

  static EvalMode all(unsigned jobs = 1) { return {true, 0, 0, jobs}; }
  static EvalMode sample(std::uint64_t k, std::uint64_t seed) { return {false, k, seed, 1}; }
};

inline void check_strategy(const Strategy& s) {
  check_game_length(s.N());
  const std::size_t size = std::size_t{1} << s.N();
  if (s.alice.size() != size || s.bob.size() != size) throw usage_error("strategy tables must cover all questions");
  for (std::size_t x = 0; x < size; ++x)
    if (s.alice[x] >= s.N() || s.bob[x] >= s.N()) throw usage_error("strategy answer exceeds n bits");
}

// Exhaustive mode counts every (x_A, z) with z a promise class, so the verdict
// is a function of table lookups only.
inline WinRate evaluate_strategy(const Strategy& s, const EvalMode& mode = EvalMode::all()) {
  check_strategy(s);
  const unsigned N = s.N();
  auto classes = promise_classes(N);
  std::vector<bits_t> distinct;
  for (std::size_t i = 1; i < classes.size(); ++i) distinct.push_back(classes[i].bits());
  const bits_t size = bits_t{1} << N;

  WinRate r;
  if (!mode.exhaustive) {
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<bits_t> pick_x(0, size - 1);
    std::uniform_int_distribution<std::size_t> pick_z(0, classes.size() - 1);
    for (std::uint64_t i = 0; i < mode.samples; ++i) {
      bits_t x = pick_x(rng);
      std::size_t zi = pick_z(rng);
      bits_t y = x ^ classes[zi].bits();
      bool same = s.alice[x] == s.bob[y];
      if (zi == 0) ++r.cases_equal, r.wins_equal += same;
      else ++r.cases_distinct, r.wins_distinct += !same;
    }
    return r;
  }

  r.cases_equal = size;
  r.cases_distinct = std::uint64_t{size} * distinct.size();
  for (bits_t x = 0; x < size; ++x) r.wins_equal += s.alice[x] == s.bob[x];

  const unsigned jobs = std::max(1U, mode.jobs);
  std::vector<std::uint64_t> partial(jobs, 0);
  auto work = [&](unsigned j) {
    std::uint64_t wins = 0;
    for (bits_t x = j; x < size; x += jobs) {
      const auto a = s.alice[x];
      const auto* bob = s.bob.data();
      for (bits_t z : distinct) wins += a != bob[x ^ z];
    }
    partial[j] = wins;
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(work, j);
    for (auto& t : pool) t.join();
  }
  for (auto p : partial) r.wins_distinct += p;
  return r;
}

// First monochromatic edge, if any.
inline std::optional<std::pair<Word, Word>> find_violation(const Coloring& c) {
  auto classes = promise_classes(c.N);
  for (bits_t x = 0; x < (bits_t{1} << c.N); ++x)
    for (std::size_t i = 1; i < classes.size(); ++i) {
      bits_t y = x ^ classes[i].bits();
      if (x < y && c.color[x] == c.color[y]) return std::make_pair(Word(x, c.N), Word(y, c.N));
    }
  return std::nullopt;
}

inline bool is_proper(const Coloring& c) { return !find_violation(c); }

// Both parties answer the color of their question.
inline Strategy strategy_from_coloring(const Coloring& c) {
  check_game_length(c.N);
  if (c.color.size() != (std::size_t{1} << c.N)) throw usage_error("coloring must cover every vertex");
  for (auto col : c.color)
    if (col >= c.N) throw usage_error("coloring uses more than N colors");
  if (auto bad = find_violation(c))
    throw usage_error("coloring is not proper: " + to_hex(bad->first) + " and " + to_hex(bad->second) +
                      " share a color");
  Strategy s;
  s.n = answer_bits(c.N);
  s.alice.assign(c.color.begin(), c.color.end());
  s.bob = s.alice;
  return s;
}

// A perfect strategy has f_A = f_B (equal questions) and is a proper coloring
// (distinct questions need distinct answers).
inline Coloring coloring_from_strategy(const Strategy& s) {
  check_strategy(s);
  for (std::size_t x = 0; x < s.alice.size(); ++x)
    if (s.alice[x] != s.bob[x])
      throw usage_error("strategy loses on equal questions " + to_hex(static_cast<bits_t>(x), s.N()) +
                        ": answer tables differ");
  Coloring c;
  c.N = s.N();
  c.color.assign(s.alice.begin(), s.alice.end());
  c.colors = 1 + *std::max_element(c.color.begin(), c.color.end());
  if (auto bad = find_violation(c))
    throw usage_error("strategy loses on " + to_hex(bad->first) + ", " + to_hex(bad->second) +
                      ": equal answers to questions at distance N/2");
  return c;
}

// Both parties answer a shared seeded random n-bit hash of the question.
inline Strategy hash_strategy(std::uint64_t seed, unsigned n) {
  if (n < 1 || n > 4) throw usage_error("hash strategy supports n in [1, 4]");
  std::mt19937_64 rng(seed);
  Strategy s;
  s.n = n;
  s.alice.resize(std::size_t{1} << (1U << n));
  for (auto& y : s.alice) y = static_cast<std::uint8_t>(rng() >> (64 - n));
  s.bob = s.alice;
  return s;
}

enum class SearchStatus { found, infeasible, inconclusive };

inline const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::found: return "found";
    case SearchStatus::infeasible: return "infeasible";
    case SearchStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

struct ColoringSearch {
  SearchStatus status = SearchStatus::inconclusive;
  std::optional<Coloring> coloring;
  std::uint64_t nodes = 0;
};

namespace detail {

// DSATUR backtracking over the Cayley graph x ~ x xor z, |z| = N/2.
class Dsatur {
 public:
  Dsatur(unsigned N, unsigned max_colors, std::uint64_t budget, std::vector<std::uint64_t> key)
      : N_(N), V_(std::size_t{1} << N), K_(max_colors), budget_(budget), key_(std::move(key)) {
    for (bits_t z : words_of_weight(N, N / 2)) shifts_.push_back(z);
    color_.assign(V_, -1);
    count_.assign(V_ * K_, 0);
    sat_.assign(V_, 0);
    free_deg_.assign(V_, static_cast<std::uint32_t>(shifts_.size()));
  }

  ColoringSearch run() {
    ColoringSearch out;
    struct Frame {
      std::size_t v;
      unsigned next;
      unsigned used_before;
    };
    std::vector<Frame> stack;
    unsigned used = 0;
    std::size_t colored = 0;
    stack.push_back({select(), 0, 0});
    while (!stack.empty()) {
      auto& f = stack.back();
      if (color_[f.v] >= 0) {
        assign(f.v, -1);
        --colored;
        used = f.used_before;
      }
      unsigned limit = std::min(used + 1, K_);
      unsigned c = f.next;
      while (c < limit && count_[f.v * K_ + c] != 0) ++c;
      if (c >= limit) {
        stack.pop_back();
        continue;
      }
      if (++out.nodes > budget_) {
        out.status = SearchStatus::inconclusive;
        return out;
      }
      f.next = c + 1;
      f.used_before = used;
      assign(f.v, static_cast<int>(c));
      ++colored;
      used = std::max(used, c + 1);
      if (colored == V_) {
        Coloring col;
        col.N = N_;
        col.color.assign(color_.begin(), color_.end());
        col.colors = used;
        out.status = SearchStatus::found;
        out.coloring = std::move(col);
        return out;
      }
      stack.push_back({select(), 0, used});
    }
    out.status = SearchStatus::infeasible;
    return out;
  }

 private:
  void assign(std::size_t v, int c) {
    const int old = color_[v];
    color_[v] = c;
    for (bits_t z : shifts_) {
      std::size_t u = v ^ z;
      if (c >= 0) {
        if (count_[u * K_ + c]++ == 0) ++sat_[u];
        --free_deg_[u];
      } else {
        if (--count_[u * K_ + old] == 0) --sat_[u];
        ++free_deg_[u];
      }
    }
  }

  std::size_t select() const {
    std::size_t best = V_;
    for (std::size_t v = 0; v < V_; ++v) {
      if (color_[v] >= 0) continue;
      if (best == V_ || sat_[v] > sat_[best] ||
          (sat_[v] == sat_[best] &&
           (free_deg_[v] > free_deg_[best] || (free_deg_[v] == free_deg_[best] && key_[v] < key_[best]))))
        best = v;
    }
    return best;
  }

  unsigned N_;
  std::size_t V_;
  unsigned K_;
  std::uint64_t budget_;
  std::vector<std::uint64_t> key_;
  std::vector<bits_t> shifts_;
  std::vector<int> color_;
  std::vector<std::uint32_t> count_;
  std::vector<unsigned> sat_;
  std::vector<std::uint32_t> free_deg_;
};

}  // namespace detail

// DSATUR-ordered backtracking with seeded restarts sharing `budget` assignment
// steps. Exhausting a restart's tree proves no coloring exists; running out of
// budget is inconclusive.
inline ColoringSearch find_coloring(unsigned N, unsigned max_colors, std::uint64_t seed, std::uint64_t budget,
                                    unsigned restarts = 4) {
  check_game_length(N);
  if (max_colors < 1 || max_colors > 64) throw usage_error("max_colors must be in [1, 64]");
  restarts = std::max(restarts, 1U);
  std::mt19937_64 rng(seed);
  ColoringSearch total;
  for (unsigned r = 0; r < restarts; ++r) {
    std::vector<std::uint64_t> key(std::size_t{1} << N);
    std::iota(key.begin(), key.end(), 0);
    if (r > 0) std::shuffle(key.begin(), key.end(), rng);
    auto res = detail::Dsatur(N, max_colors, budget / restarts + 1, std::move(key)).run();
    total.nodes += res.nodes;
    if (res.status != SearchStatus::inconclusive) {
      total.status = res.status;
      total.coloring = std::move(res.coloring);
      if (total.coloring && find_violation(*total.coloring)) throw invariant_error("search returned improper coloring");
      return total;
    }
  }
  total.status = SearchStatus::inconclusive;
  return total;
}

inline void write_coloring(std::ostream& out, const Coloring& c) {
  out << "COLORING v1 N=" << c.N << " colors=" << c.colors << '\n';
  for (std::size_t x = 0; x < c.color.size(); ++x)
    out << to_hex(static_cast<bits_t>(x), c.N) << ' ' << c.color[x] << '\n';
}

inline Coloring read_coloring(std::istream& in) {
  std::string magic, version, n_field, colors_field;
  if (!(in >> magic >> version >> n_field >> colors_field) || magic != "COLORING" || version != "v1" ||
      n_field.rfind("N=", 0) != 0 || colors_field.rfind("colors=", 0) != 0)
    throw parse_error("bad coloring header");
  Coloring c;
  try {
    c.N = static_cast<unsigned>(std::stoul(n_field.substr(2)));
    c.colors = static_cast<unsigned>(std::stoul(colors_field.substr(7)));
  } catch (const std::exception&) {
    throw parse_error("bad coloring header");
  }
  if (!is_power_of_two(c.N) || c.N < 2 || c.N > 16) throw parse_error("coloring N must be 2, 4, 8 or 16");
  const std::size_t size = std::size_t{1} << c.N;
  c.color.assign(size, 0);
  std::vector<char> seen(size, 0);
  std::string word;
  std::uint64_t col;
  std::size_t lines = 0;
  while (in >> word >> col) {
    auto w = parse_hex(word, c.N);
    if (seen[w.bits()]) throw parse_error("vertex " + word + " listed twice");
    if (col >= c.colors) throw parse_error("color of " + word + " exceeds colors=" + std::to_string(c.colors));
    seen[w.bits()] = 1;
    c.color[w.bits()] = static_cast<std::uint32_t>(col);
    ++lines;
  }
  if (!in.eof()) throw parse_error("malformed coloring line");
  if (lines != size) throw parse_error("coloring lists " + std::to_string(lines) + " of " + std::to_string(size) + " vertices");
  return c;
}

}  // namespace telepathy
