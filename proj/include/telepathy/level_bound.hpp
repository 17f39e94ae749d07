#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "clique_cover.hpp"
#include "combinator.hpp"
#include "ekr.hpp"
#include "hamming_graph.hpp"
#include "symmetry.hpp"

namespace telepathy {

enum class BoundMethod { trivial, edgeless, ekr, case_split, cover, exact };

inline const char* to_string(BoundMethod m) {
  switch (m) {
    case BoundMethod::trivial: return "trivial";
    case BoundMethod::edgeless: return "edgeless";
    case BoundMethod::ekr: return "ekr";
    case BoundMethod::case_split: return "case-split";
    case BoundMethod::cover: return "cover";
    case BoundMethod::exact: return "exact";
  }
  return "?";
}

struct EkrParams {
  unsigned n, k, t;
  std::uint64_t value;
};

// Cover-size bound for the survivor graph of one third-vertex type.
struct TypeBound {
  TypeRecord type;
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  CliqueCover cover;
  std::uint64_t seed = 0;
  bool mirrored = false;  // cover obtained by mapping the mirror type's cover
};

struct PairCase {
  unsigned dist = 0;
  Word u, v;
  std::vector<TypeBound> types;
  CombinatorResult combinator;
};

struct CaseSplit {
  EkrParams close;  // every pair shares >= 3 positions
  std::vector<PairCase> cases;
};

struct BoundResult {
  std::uint64_t value = 0;
  BoundMethod method = BoundMethod::trivial;
  std::optional<EkrParams> ekr;
  std::vector<Word> witness;  // an independent set of the level, when known
  std::optional<CaseSplit> split;
  std::optional<CliqueCover> cover;
};

struct BoundOptions {
  CoverOptions cover;
  unsigned jobs = 1;
};

namespace detail {

inline void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& body) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(count);
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < std::min<std::size_t>(jobs, count); ++j)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < count;) try {
          body(i);
        } catch (...) {
          errors[i] = std::current_exception();
        }
    });
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace detail

// Types of one canonical pair with verified-by-construction cover sizes.
// Types whose mirror has its own cover reuse it through the u<->v permutation.
inline PairCase analyse_pair(const LevelGraph& level, Word u, Word v, const BoundOptions& opt) {
  PairCase pc;
  pc.dist = distance(u, v);
  pc.u = u;
  pc.v = v;
  const unsigned k = *level.level;
  auto types = enumerate_types(u, v, k);
  auto part = block_partition(u, v);

  std::map<Profile, std::size_t> index;
  for (std::size_t i = 0; i < types.size(); ++i) index[types[i].profile] = i;

  std::vector<std::size_t> direct;
  for (std::size_t i = 0; i < types.size(); ++i)
    if (!types[i].mirror_of || !index.contains(*types[i].mirror_of)) direct.push_back(i);

  pc.types.resize(types.size());
  detail::parallel_for(direct.size(), opt.jobs, [&](std::size_t j) {
    const auto& t = types[direct[j]];
    auto surv = survivor_subgraph(level, {u, v, t.representative});
    auto& tb = pc.types[direct[j]];
    tb.type = t;
    tb.a = t.orbit_size;
    tb.seed = opt.cover.seed;
    tb.cover = to_word_cover(surv, best_cover(surv.adjacency, opt.cover), {u, v, t.representative});
    tb.b = tb.cover.size();
  });

  std::vector<char> done(types.size(), 0);
  for (auto i : direct) done[i] = 1;
  for (std::size_t i = 0; i < types.size(); ++i) {
    if (done[i]) continue;
    const auto& t = types[i];
    const auto& src = pc.types[index.at(*t.mirror_of)];
    auto perm = mirror(t.profile, part).second;
    auto& tb = pc.types[i];
    tb.type = t;
    tb.a = t.orbit_size;
    tb.seed = src.seed;
    tb.mirrored = true;
    tb.cover = src.cover;
    tb.cover.roots = {u, v, t.representative};
    for (auto& clique : tb.cover.cliques) {
      for (auto& w : clique) w = perm.apply(w);
      std::sort(clique.begin(), clique.end());
    }
    std::sort(tb.cover.cliques.begin(), tb.cover.cliques.end());
    tb.b = tb.cover.size();
  }

  std::vector<CombinatorEntry> entries;
  for (const auto& tb : pc.types) entries.push_back({tb.a, tb.b});
  pc.combinator = combinator_transcript(entries, 2);
  return pc;
}

// Level-6 bound of G_16: an independent set either has all pairwise
// intersections >= 3 (EKR), or contains a pair at distance 12, or one at
// distance 10 (distance 8 is an edge; the remaining distances 2, 4, 6 are
// intersections >= 3).
inline CaseSplit level6_case_split(const LevelGraph& level, const BoundOptions& opt) {
  CaseSplit cs;
  cs.close = {16, 6, 3, ekr_bound(16, 6, 3)};
  for (unsigned d : {12U, 10U}) {
    auto [u, v] = canonical_pair(d);
    cs.cases.push_back(analyse_pair(level, u, v, opt));
  }
  return cs;
}

inline BoundResult level_bound(unsigned N, unsigned k, const BoundOptions& opt = {}) {
  check_length(N);
  if (k > N) throw usage_error("weight level out of range");
  BoundResult r;
  if (k == 0 || k == N) {
    r.value = 1;
    r.method = BoundMethod::trivial;
    r.witness = {Word(k == 0 ? 0 : low_mask(N), N)};
    return r;
  }
  auto g = build_level_graph(N, k);
  if (g.adjacency.edge_count() == 0) {
    r.value = g.size();
    r.method = BoundMethod::edgeless;
    r.witness = g.vertices;
    return r;
  }
  if (4 * k == N && ekr_applicable(N, k, 1)) {
    r.method = BoundMethod::ekr;
    r.ekr = EkrParams{N, k, 1, ekr_bound(N, k, 1)};
    r.value = r.ekr->value;
    r.witness = star_family(N, k);
    return r;
  }
  if (N == 16 && k == 6) {
    r.method = BoundMethod::case_split;
    r.split = level6_case_split(g, opt);
    r.value = r.split->close.value;
    for (const auto& c : r.split->cases) r.value = std::max(r.value, c.combinator.value);
    return r;
  }
  r.method = BoundMethod::cover;
  r.cover = to_word_cover(g, best_cover(g.adjacency, opt.cover));
  r.value = r.cover->size();
  return r;
}

}  // namespace telepathy
