#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bitrow.hpp"
#include "word.hpp"

namespace telepathy {

// Simple undirected graph on vertices 0..n-1 with one adjacency bit-row per vertex.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : rows_(n, BitRow(n)) {}

  std::size_t size() const { return rows_.size(); }
  bool adjacent(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
  const BitRow& row(std::size_t i) const { return rows_[i]; }
  std::size_t degree(std::size_t i) const { return rows_[i].count(); }

  void add_edge(std::size_t i, std::size_t j) {
    rows_[i].set(j);
    rows_[j].set(i);
  }

  std::size_t edge_count() const {
    std::size_t c = 0;
    for (const auto& r : rows_) c += r.count();
    return c / 2;
  }

  // Induced subgraph on `keep` (ascending indices), re-indexed 0..|keep|-1.
  Graph induced(std::span<const std::size_t> keep) const {
    Graph g(keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a)
      for (std::size_t b = a + 1; b < keep.size(); ++b)
        if (adjacent(keep[a], keep[b])) g.add_edge(a, b);
    return g;
  }

 private:
  std::vector<BitRow> rows_;
};

// Induced subgraph of G_N on a set of words, edges at distance exactly N/2.
// `level` is the common weight, or nullopt for mixed-weight vertex sets.
struct LevelGraph {
  unsigned N = 0;
  std::optional<unsigned> level;
  std::vector<Word> vertices;  // ascending
  Graph adjacency;

  std::size_t size() const { return vertices.size(); }

  std::optional<std::size_t> index_of(Word w) const {
    auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
    if (it == vertices.end() || *it != w) return std::nullopt;
    return static_cast<std::size_t>(it - vertices.begin());
  }
};

inline void check_length(unsigned N) {
  if (!is_power_of_two(N) || N < 2 || N > 32) throw usage_error("N must be a power of two in [2, 32]");
}

inline std::vector<Word> enumerate_level(unsigned N, unsigned k) {
  if (N < 1 || N > 32) throw usage_error("word length must be in [1, 32]");
  if (k > N) throw usage_error("weight level out of range");
  std::vector<Word> out;
  for (bits_t b : words_of_weight(N, k)) out.emplace_back(b, N);
  return out;
}

// Builds the distance-N/2 graph on an arbitrary ascending word list.
inline LevelGraph build_word_graph(unsigned N, std::vector<Word> vertices, std::optional<unsigned> level) {
  check_length(N);
  std::sort(vertices.begin(), vertices.end());
  LevelGraph g{N, level, std::move(vertices), Graph{}};
  g.adjacency = Graph(g.vertices.size());
  const unsigned half = N / 2;
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < g.vertices.size(); ++j)
      if (hamming(g.vertices[i].bits(), g.vertices[j].bits()) == half) g.adjacency.add_edge(i, j);
  return g;
}

inline LevelGraph build_level_graph(unsigned N, unsigned k) {
  check_length(N);
  return build_word_graph(N, enumerate_level(N, k), k);
}

// All words of weight parity `parity` (0 = even); for N >= 4 this is a union
// of components of G_N since N/2 is even.
inline LevelGraph build_component_graph(unsigned N, unsigned parity) {
  check_length(N);
  if (N == 2) throw usage_error("parity components are not defined for N=2 (distance N/2 is odd)");
  if (N > 16) throw usage_error("component graphs are only materialized for N <= 16");
  std::vector<Word> vs;
  for (bits_t b = 0; b < (bits_t{1} << N); ++b)
    if (static_cast<unsigned>(std::popcount(b)) % 2 == parity) vs.emplace_back(b, N);
  return build_word_graph(N, std::move(vs), std::nullopt);
}

inline LevelGraph build_full_graph(unsigned N) {
  check_length(N);
  if (N > 16) throw usage_error("the full graph is only materialized for N <= 16");
  std::vector<Word> vs;
  for (bits_t b = 0; b < (bits_t{1} << N); ++b) vs.emplace_back(b, N);
  return build_word_graph(N, std::move(vs), std::nullopt);
}

// Removes the roots and every vertex adjacent to a root.
inline LevelGraph survivor_subgraph(const LevelGraph& g, std::span<const Word> roots) {
  BitRow dead(g.size());
  for (Word r : roots) {
    auto idx = g.index_of(r);
    if (!idx) throw usage_error("root " + to_hex(r) + " is not a vertex of the graph");
    dead.set(*idx);
    dead |= g.adjacency.row(*idx);
  }
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!dead.test(i)) keep.push_back(i);
  LevelGraph out{g.N, g.level, {}, g.adjacency.induced(keep)};
  out.vertices.reserve(keep.size());
  for (auto i : keep) out.vertices.push_back(g.vertices[i]);
  return out;
}

inline LevelGraph survivor_subgraph(const LevelGraph& g, std::initializer_list<Word> roots) {
  return survivor_subgraph(g, std::span<const Word>(roots.begin(), roots.size()));
}

}  // namespace telepathy
