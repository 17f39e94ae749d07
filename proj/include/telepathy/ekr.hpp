#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hamming_graph.hpp"

namespace telepathy {

inline bool ekr_applicable(unsigned n, unsigned k, unsigned t) {
  return t >= 1 && t <= k && k <= n && n >= (k - t + 1) * (t + 1);
}

// Maximum size of a family of k-subsets of an n-set whose members pairwise
// share at least t elements: binomial(n-t, k-t), valid when
// n >= (k-t+1)(t+1).
inline std::uint64_t ekr_bound(unsigned n, unsigned k, unsigned t) {
  if (!ekr_applicable(n, k, t))
    throw ekr_inapplicable("EKR inapplicable for (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                           ", t=" + std::to_string(t) + "): need 1 <= t <= k <= n and n >= (k-t+1)(t+1)");
  return binomial(n - t, k - t);
}

// Weight-k words containing position 0.
inline std::vector<Word> star_family(unsigned N, unsigned k) {
  if (k < 1 || k > N) throw usage_error("star family needs 1 <= k <= N");
  std::vector<Word> out;
  for (bits_t b : words_of_weight(N, k))
    if (b & 1U) out.emplace_back(b, N);
  return out;
}

// k-subsets of an n-set, adjacent when they share fewer than t elements; its
// independent sets are exactly the t-intersecting families.
inline Graph intersection_graph(unsigned n, unsigned k, unsigned t) {
  auto sets = words_of_weight(n, k);
  Graph g(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (static_cast<unsigned>(std::popcount(sets[i] & sets[j])) < t) g.add_edge(i, j);
  return g;
}

}  // namespace telepathy
