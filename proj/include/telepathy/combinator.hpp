#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

namespace telepathy {

struct CombinatorEntry {
  std::uint64_t a;  // vertices of this type
  std::uint64_t b;  // independence bound of the survivor graph through one of them
};

struct CombinatorResult {
  std::uint64_t value = 0;
  std::uint64_t sum_arm = 0;  // base + sum of a over types avoided
  std::uint64_t max_arm = 0;  // base + 1 + max b over types hit (0 when none)
  std::vector<std::size_t> hit;  // indices (into the input) bounded by their b
};

// An independent set through a fixed pair either avoids every type in S (so
// it has at most base + sum_{i not in S} a_i vertices) or contains some w of a
// type in S (at most base + 1 + b_i). Minimizes the larger arm over S; the
// optimal S is always a set of smallest-b types.
inline CombinatorResult combinator_transcript(std::span<const CombinatorEntry> entries, std::uint64_t base) {
  std::vector<std::size_t> order(entries.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto x, auto y) { return entries[x].b < entries[y].b; });

  std::uint64_t avoided = 0;
  for (const auto& e : entries) avoided += e.a;

  CombinatorResult best{base + avoided, base + avoided, 0, {}};
  for (std::size_t s = 0; s < order.size(); ++s) {
    avoided -= entries[order[s]].a;
    std::uint64_t sum_arm = base + avoided;
    std::uint64_t max_arm = base + 1 + entries[order[s]].b;
    std::uint64_t value = std::max(sum_arm, max_arm);
    if (value < best.value) {
      best = {value, sum_arm, max_arm, {order.begin(), order.begin() + s + 1}};
    }
  }
  std::sort(best.hit.begin(), best.hit.end());
  return best;
}

inline std::uint64_t subset_combinator(std::span<const CombinatorEntry> entries, std::uint64_t base) {
  return combinator_transcript(entries, base).value;
}

}  // namespace telepathy
