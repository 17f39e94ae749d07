#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hamming_graph.hpp"
#include "independence.hpp"

namespace telepathy {

// Exact audit of M(G) = 2 M(G_e) = 4 M(G_{e,<N/2}) on small N.
struct ReductionReport {
  unsigned N = 0;
  bool parity_edge_free = false;  // no edge joins even and odd weight
  std::size_t alpha_even = 0;
  std::size_t alpha_odd = 0;
  std::size_t alpha_full = 0;    // whole graph; for N=8 the sum over the two components
  std::size_t alpha_lower = 0;   // even words of weight < N/2
  std::size_t alpha_middle = 0;  // the weight-N/2 level alone

  bool components_identity() const { return alpha_full == 2 * alpha_even; }
  bool lower_identity() const { return 2 * alpha_even == 4 * alpha_lower; }
};

inline bool parity_edge_free(unsigned N) {
  for (bits_t x = 0; x < (bits_t{1} << N); ++x)
    for (bits_t y = x + 1; y < (bits_t{1} << N); ++y)
      if (hamming(x, y) == N / 2 && std::popcount(x) % 2 != std::popcount(y) % 2) return false;
  return true;
}

inline ReductionReport validate_reduction(unsigned N, const AlphaBudget& budget = {}) {
  if (N != 4 && N != 8) throw usage_error("reduction audit supports N in {4, 8}");
  ReductionReport r;
  r.N = N;
  r.parity_edge_free = parity_edge_free(N);
  r.alpha_even = exact_alpha(build_component_graph(N, 0), budget).size;
  r.alpha_odd = exact_alpha(build_component_graph(N, 1), budget).size;
  if (N == 4) {
    r.alpha_full = exact_alpha(build_full_graph(N), budget).size;
  } else {
    if (!r.parity_edge_free) throw invariant_error("parity classes are joined by an edge");
    r.alpha_full = r.alpha_even + r.alpha_odd;
  }

  std::vector<Word> lower;
  for (unsigned k = 0; 2 * k < N; k += 2)
    for (auto w : enumerate_level(N, k)) lower.push_back(w);
  r.alpha_lower = exact_alpha(build_word_graph(N, lower, std::nullopt), budget).size;
  r.alpha_middle = exact_alpha(build_level_graph(N, N / 2), budget).size;
  return r;
}

}  // namespace telepathy
