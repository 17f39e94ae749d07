#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "hamming_graph.hpp"

namespace telepathy {

struct AlphaBudget {
  std::size_t max_vertices = 2000;
  std::uint64_t max_nodes = 200'000'000;
};

struct AlphaResult {
  std::size_t size = 0;
  std::vector<std::size_t> witness;  // ascending vertex indices
  std::uint64_t nodes = 0;
};

namespace detail {

// Maximum independent set as a maximum clique of the complement; the bound at
// each node is a greedy partition of the candidates into cliques of g.
class AlphaSearch {
 public:
  AlphaSearch(const Graph& g, const AlphaBudget& budget) : budget_(budget) {
    const std::size_t n = g.size();
    // Low-degree vertices first: they are the likeliest members of large
    // independent sets and get colored first.
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](auto a, auto b) { return g.degree(a) < g.degree(b); });
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i) pos[order_[i]] = i;
    rows_.assign(n, BitRow(n));
    for (std::size_t i = 0; i < n; ++i) g.row(order_[i]).for_each([&](std::size_t j) { rows_[i].set(pos[j]); });
  }

  AlphaResult run() {
    const std::size_t n = rows_.size();
    BitRow all(n);
    all.set_all();
    current_.clear();
    expand(all);
    AlphaResult r;
    r.size = best_.size();
    for (auto i : best_) r.witness.push_back(order_[i]);
    std::sort(r.witness.begin(), r.witness.end());
    r.nodes = nodes_;
    return r;
  }

 private:
  void expand(BitRow cand) {
    if (++nodes_ > budget_.max_nodes)
      throw resource_error("independence search exceeded node budget of " + std::to_string(budget_.max_nodes));
    std::vector<std::size_t> verts;
    std::vector<std::size_t> bound;
    BitRow rest = cand;
    std::size_t k = 0;
    while (!rest.none()) {
      ++k;
      BitRow open = rest;
      while (!open.none()) {
        std::size_t v = open.first();
        open &= rows_[v];
        rest.reset(v);
        verts.push_back(v);
        bound.push_back(k);
      }
    }
    for (std::size_t i = verts.size(); i-- > 0;) {
      if (current_.size() + bound[i] <= best_.size()) return;
      std::size_t v = verts[i];
      current_.push_back(v);
      BitRow next = cand;
      next.and_not(rows_[v]);
      next.reset(v);
      if (next.none()) {
        if (current_.size() > best_.size()) best_ = current_;
      } else {
        expand(std::move(next));
      }
      current_.pop_back();
      cand.reset(v);
    }
  }

  AlphaBudget budget_;
  std::vector<std::size_t> order_;
  std::vector<BitRow> rows_;
  std::vector<std::size_t> current_, best_;
  std::uint64_t nodes_ = 0;
};

}  // namespace detail

inline AlphaResult exact_alpha(const Graph& g, const AlphaBudget& budget = {}) {
  if (g.size() > budget.max_vertices)
    throw resource_error("graph has " + std::to_string(g.size()) + " vertices, budget allows " +
                         std::to_string(budget.max_vertices));
  if (g.size() == 0) return {};
  return detail::AlphaSearch(g, budget).run();
}

inline AlphaResult exact_alpha(const LevelGraph& g, const AlphaBudget& budget = {}) {
  return exact_alpha(g.adjacency, budget);
}

inline bool is_independent(const Graph& g, const std::vector<std::size_t>& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (set[i] == set[j] || g.adjacent(set[i], set[j])) return false;
  return true;
}

}  // namespace telepathy
