#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hamming_graph.hpp"

namespace telepathy {

// Partition of a graph's vertices into cliques; its size bounds the
// independence number from above.
struct CliqueCover {
  unsigned N = 0;
  std::optional<unsigned> level;
  std::vector<Word> roots;  // removed roots identifying a survivor subgraph
  std::vector<std::vector<Word>> cliques;

  std::size_t size() const { return cliques.size(); }
};

using IndexCover = std::vector<std::vector<std::size_t>>;

enum class CoverRule {
  // Start at the uncovered vertex of maximum residual degree, extend by
  // descending residual degree.
  max_degree,
  // Recursive-largest-first in clique form: start at minimum residual degree,
  // extend by the candidate that keeps the most candidates alive.
  keep_candidates,
};

namespace detail {

inline std::vector<std::uint64_t> tie_keys(std::size_t n, unsigned restart, std::mt19937_64& rng) {
  std::vector<std::uint64_t> key(n);
  std::iota(key.begin(), key.end(), 0);
  if (restart > 0) std::shuffle(key.begin(), key.end(), rng);
  return key;
}

inline IndexCover cover_max_degree(const Graph& g, const std::vector<std::uint64_t>& key) {
  const std::size_t n = g.size();
  BitRow uncovered(n);
  uncovered.set_all();
  std::vector<std::size_t> deg(n);
  for (std::size_t i = 0; i < n; ++i) deg[i] = g.degree(i);
  auto before = [&](std::size_t a, std::size_t b) { return deg[a] != deg[b] ? deg[a] > deg[b] : key[a] < key[b]; };

  IndexCover cover;
  std::size_t left = n;
  std::vector<std::size_t> cand;
  while (left > 0) {
    std::size_t s = n;
    uncovered.for_each([&](std::size_t i) {
      if (s == n || before(i, s)) s = i;
    });
    cand.clear();
    (g.row(s) & uncovered).for_each([&](std::size_t i) { cand.push_back(i); });
    std::sort(cand.begin(), cand.end(), before);

    std::vector<std::size_t> clique{s};
    BitRow common = g.row(s);
    for (auto c : cand) {
      if (!common.test(c)) continue;
      clique.push_back(c);
      common &= g.row(c);
    }
    for (auto m : clique) {
      uncovered.reset(m);
      --left;
    }
    for (auto m : clique) (g.row(m) & uncovered).for_each([&](std::size_t j) { --deg[j]; });
    cover.push_back(std::move(clique));
  }
  return cover;
}

inline IndexCover cover_keep_candidates(const Graph& g, const std::vector<std::uint64_t>& key) {
  const std::size_t n = g.size();
  BitRow uncovered(n);
  uncovered.set_all();
  IndexCover cover;
  std::size_t left = n;
  while (left > 0) {
    std::size_t s = n, sd = 0;
    uncovered.for_each([&](std::size_t i) {
      std::size_t d = g.row(i).count_and(uncovered);
      if (s == n || d < sd || (d == sd && key[i] < key[s])) s = i, sd = d;
    });
    std::vector<std::size_t> clique{s};
    BitRow cand = g.row(s) & uncovered;
    while (!cand.none()) {
      std::size_t best = n, bd = 0;
      cand.for_each([&](std::size_t i) {
        std::size_t d = g.row(i).count_and(cand);
        if (best == n || d > bd || (d == bd && key[i] < key[best])) best = i, bd = d;
      });
      clique.push_back(best);
      cand &= g.row(best);
    }
    for (auto m : clique) {
      uncovered.reset(m);
      --left;
    }
    cover.push_back(std::move(clique));
  }
  return cover;
}

}  // namespace detail

// Best (fewest cliques) cover over `restarts` runs of the rule; restart 0
// breaks ties by lowest index, later restarts by a seeded random order.
inline IndexCover greedy_clique_cover(const Graph& g, std::uint64_t seed, unsigned restarts,
                                      CoverRule rule = CoverRule::max_degree) {
  std::mt19937_64 rng(seed);
  IndexCover best;
  bool have = false;
  for (unsigned r = 0; r < std::max(restarts, 1U); ++r) {
    auto key = detail::tie_keys(g.size(), r, rng);
    auto c = rule == CoverRule::max_degree ? detail::cover_max_degree(g, key) : detail::cover_keep_candidates(g, key);
    if (!have || c.size() < best.size()) best = std::move(c), have = true;
  }
  return best;
}

// Iterated greedy: reorder the cliques and re-pack vertices first-fit. A pass
// never increases the clique count.
inline IndexCover refine_cover(const Graph& g, IndexCover cover, std::uint64_t seed, unsigned iterations) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  IndexCover best = cover;
  for (unsigned it = 0; it < iterations; ++it) {
    switch (rng() % 3) {
      case 0:
        std::stable_sort(cover.begin(), cover.end(), [](auto& a, auto& b) { return a.size() > b.size(); });
        break;
      case 1:
        std::reverse(cover.begin(), cover.end());
        break;
      default:
        std::shuffle(cover.begin(), cover.end(), rng);
    }
    IndexCover next;
    std::vector<BitRow> common;
    for (const auto& clique : cover)
      for (auto x : clique) {
        std::size_t q = 0;
        while (q < next.size() && !common[q].test(x)) ++q;
        if (q == next.size()) {
          next.push_back({x});
          common.push_back(g.row(x));
        } else {
          next[q].push_back(x);
          common[q] &= g.row(x);
        }
      }
    cover = std::move(next);
    if (cover.size() < best.size()) best = cover;
  }
  return best;
}

struct CoverOptions {
  std::uint64_t seed = 0;
  unsigned restarts = 4;
  unsigned refine_iterations = 1500;
};

// Runs both greedy rules and refines the smaller cover.
inline IndexCover best_cover(const Graph& g, const CoverOptions& opt) {
  auto a = greedy_clique_cover(g, opt.seed, opt.restarts, CoverRule::max_degree);
  auto b = greedy_clique_cover(g, opt.seed, opt.restarts, CoverRule::keep_candidates);
  auto& start = b.size() <= a.size() ? b : a;
  auto refined = refine_cover(g, std::move(start), opt.seed, opt.refine_iterations);
  for (auto& c : refined) std::sort(c.begin(), c.end());
  return refined;
}

inline CliqueCover to_word_cover(const LevelGraph& g, const IndexCover& cover, std::vector<Word> roots = {}) {
  CliqueCover out{g.N, g.level, std::move(roots), {}};
  out.cliques.reserve(cover.size());
  for (const auto& c : cover) {
    std::vector<Word> words;
    words.reserve(c.size());
    for (auto i : c) words.push_back(g.vertices[i]);
    out.cliques.push_back(std::move(words));
  }
  return out;
}

inline CliqueCover greedy_clique_cover(const LevelGraph& g, std::uint64_t seed, unsigned restarts,
                                       CoverRule rule = CoverRule::max_degree) {
  return to_word_cover(g, greedy_clique_cover(g.adjacency, seed, restarts, rule));
}

// True iff the cliques partition V(g) and every within-clique pair is at
// distance N/2.
inline bool verify_cover(const LevelGraph& g, const CliqueCover& c) {
  std::vector<char> seen(g.size(), 0);
  std::size_t covered = 0;
  for (const auto& clique : c.cliques) {
    if (clique.empty()) return false;
    for (std::size_t i = 0; i < clique.size(); ++i) {
      if (clique[i].length() != g.N) return false;
      auto idx = g.index_of(clique[i]);
      if (!idx || seen[*idx]) return false;
      seen[*idx] = 1;
      ++covered;
      for (std::size_t j = 0; j < i; ++j)
        if (distance(clique[i], clique[j]) != g.N / 2) return false;
    }
  }
  return covered == g.size();
}

}  // namespace telepathy
