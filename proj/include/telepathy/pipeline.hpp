#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "clique_cover.hpp"
#include "combinator.hpp"
#include "level_bound.hpp"
#include "reference_tables.hpp"

namespace telepathy {

inline std::uint64_t chi_lower(std::uint64_t vertex_count, std::uint64_t max_independent) {
  if (max_independent == 0) throw usage_error("independence bound must be positive");
  return (vertex_count + max_independent - 1) / max_independent;
}

struct LevelSection {
  unsigned k = 0;
  BoundResult bound;
};

struct FixtureCase {
  std::string name;  // d12 | d10
  std::vector<CombinatorEntry> rows;
  std::uint64_t value = 0;
};

struct Certificate {
  unsigned N = 0;
  std::vector<LevelSection> levels;
  std::vector<FixtureCase> fixtures;
  std::uint64_t fixture_total = 0;
  std::uint64_t level_sum = 0;
  std::uint64_t total = 0;  // 4 x level_sum
  std::uint64_t chi_lower_bound = 0;
  std::vector<std::string> notes;

  bool establishes_impossibility() const { return chi_lower_bound > N; }
};

struct PipelineOptions {
  unsigned n = 4;
  BoundOptions bounds;
};

inline std::string cover_file_name(const std::string& case_name, const Profile& p) {
  return "covers/" + case_name + "_" + std::to_string(p.w[0]) + "-" + std::to_string(p.w[1]) + "-" +
         std::to_string(p.w[2]) + "-" + std::to_string(p.w[3]) + ".cover";
}

inline std::string case_name(unsigned dist) { return "d" + std::to_string(dist); }

inline void write_cover(const std::filesystem::path& file, const CliqueCover& c, std::uint64_t seed) {
  std::ofstream out(file);
  if (!out) throw std::runtime_error("cannot write " + file.string());
  out << "COVER v1 N=" << c.N << " level=" << (c.level ? *c.level : 0);
  const char* names[] = {"u", "v", "w"};
  for (std::size_t i = 0; i < c.roots.size() && i < 3; ++i) out << ' ' << names[i] << '=' << to_hex(c.roots[i]);
  out << " seed=" << seed << '\n';
  for (const auto& clique : c.cliques) {
    for (std::size_t i = 0; i < clique.size(); ++i) out << (i ? " " : "") << to_hex(clique[i]);
    out << '\n';
  }
}

inline std::string join_rows(const std::vector<CombinatorEntry>& rows) {
  std::string s;
  for (std::size_t i = 0; i < rows.size(); ++i)
    s += (i ? "," : "") + std::to_string(rows[i].a) + ":" + std::to_string(rows[i].b);
  return s;
}

inline void write_certificate(const Certificate& cert, const std::filesystem::path& dir, std::uint64_t seed) {
  std::filesystem::create_directories(dir / "covers");
  std::ostringstream out;
  out << "TELEPATHY-CERT v1\n";
  out << "graph N=" << cert.N << '\n';
  for (const auto& note : cert.notes) out << "note " << note << '\n';
  for (const auto& sec : cert.levels) {
    const auto& b = sec.bound;
    out << "level " << sec.k << " bound " << b.value << " method " << to_string(b.method);
    if (b.ekr) out << " n=" << b.ekr->n << " k=" << b.ekr->k << " t=" << b.ekr->t << " witness=star";
    if (b.cover) {
      auto rel = "covers/level" + std::to_string(sec.k) + ".cover";
      write_cover(dir / rel, *b.cover, seed);
      out << " cover=" << rel;
    }
    out << '\n';
    if (!b.split) continue;
    const auto& cs = *b.split;
    out << "split close method ekr n=" << cs.close.n << " k=" << cs.close.k << " t=" << cs.close.t << " bound "
        << cs.close.value << '\n';
    for (const auto& pc : cs.cases) {
      auto name = case_name(pc.dist);
      out << "case " << name << " u=" << to_hex(pc.u) << " v=" << to_hex(pc.v) << " base=2\n";
      for (const auto& tb : pc.types) {
        auto rel = cover_file_name(name, tb.type.profile);
        write_cover(dir / rel, tb.cover, tb.seed);
        out << "type profile=" << to_string(tb.type.profile) << " a=" << tb.a << " b=" << tb.b << " cover=" << rel;
        if (tb.type.listed_index) out << " listed=" << *tb.type.listed_index;
        if (tb.mirrored) out << " mirror-of=" << to_string(tb.type.mirror);
        out << '\n';
      }
      out << "combinator case=" << name << " value=" << pc.combinator.value << '\n';
    }
  }
  for (const auto& f : cert.fixtures)
    out << "fixture case=" << f.name << " base=2 rows=" << join_rows(f.rows) << " value=" << f.value << '\n';
  if (!cert.fixtures.empty()) {
    out << "fixture total levels=";
    // Level bounds with the fixture level-6 value substituted.
    for (std::size_t i = 0; i < cert.levels.size(); ++i) {
      auto v = cert.levels[i].k == 6 ? std::max(cert.fixtures[0].value, cert.fixtures[1].value)
                                     : cert.levels[i].bound.value;
      out << (i ? "," : "") << v;
    }
    out << " M=" << cert.fixture_total << " chi-lower=" << chi_lower(std::uint64_t{1} << cert.N, cert.fixture_total)
        << '\n';
  }
  out << "total M=" << cert.total << '\n';
  out << "chi-lower " << cert.chi_lower_bound << '\n';

  std::ofstream file(dir / "certificate.txt");
  if (!file) throw std::runtime_error("cannot write certificate in " + dir.string());
  file << out.str();
}

inline std::vector<CombinatorEntry> fixture_rows(unsigned dist) {
  std::vector<CombinatorEntry> rows;
  if (dist == 12)
    for (const auto& r : reference::d12_types) rows.push_back({r.a, r.b});
  else
    for (const auto& r : reference::d10_types) rows.push_back({r.a, r.b});
  return rows;
}

// Bounds M(G_N) by 4 x sum of level bounds over even weights below N/2 and
// writes covers plus the certificate under out_dir.
inline Certificate run_pipeline(const PipelineOptions& opt, const std::filesystem::path& out_dir) {
  if (opt.n < 2 || opt.n > 4) throw usage_error("pipeline supports n in {2, 3, 4}");
  Certificate cert;
  cert.N = 1U << opt.n;
  cert.notes = {
      "reduction x4: G_N splits into even/odd weight components swapped by flipping one bit; a maximum "
      "independent set may be taken complement-closed, pairing weight w with N-w",
      "reduction assumption: the middle level (weight N/2) is assumed to add nothing; audit with "
      "validate-reduction",
      "ekr: families of k-subsets pairwise sharing >= t elements have size <= binomial(n-t, k-t) when "
      "n >= (k-t+1)(t+1)",
      "level 2: edgeless since two weight-2 words are at distance <= 4",
      "types: profiles under per-block permutations fixing u and v; mirror types reuse the u<->v image of "
      "the listed type's cover",
  };

  for (unsigned k = 0; 2 * k < cert.N; k += 2) {
    LevelSection sec{k, level_bound(cert.N, k, opt.bounds)};
    auto level = build_level_graph(cert.N, k);
    if (sec.bound.cover && !verify_cover(level, *sec.bound.cover))
      throw pipeline_error("level " + std::to_string(k), "cover does not verify");
    if (sec.bound.split) {
      for (const auto& pc : sec.bound.split->cases)
        for (const auto& tb : pc.types) {
          auto surv = survivor_subgraph(level, tb.cover.roots);
          if (!verify_cover(surv, tb.cover))
            throw pipeline_error("case " + case_name(pc.dist) + " type " + to_string(tb.type.profile),
                                 "cover does not verify");
        }
    }
    cert.level_sum += sec.bound.value;
    cert.levels.push_back(std::move(sec));
  }
  cert.total = 4 * cert.level_sum;
  cert.chi_lower_bound = chi_lower(std::uint64_t{1} << cert.N, cert.total);

  if (cert.N == 16) {
    std::uint64_t fixture_sum = 0;
    for (unsigned d : {12U, 10U}) {
      auto rows = fixture_rows(d);
      cert.fixtures.push_back({case_name(d), rows, subset_combinator(rows, 2)});
    }
    for (const auto& sec : cert.levels)
      fixture_sum += sec.k == 6 ? std::max(cert.fixtures[0].value, cert.fixtures[1].value) : sec.bound.value;
    cert.fixture_total = 4 * fixture_sum;
  }

  write_certificate(cert, out_dir, opt.bounds.cover.seed);
  if (!cert.establishes_impossibility())
    throw pipeline_error("total", "M=" + std::to_string(cert.total) + " gives chi >= " +
                                      std::to_string(cert.chi_lower_bound) + ", not above N=" +
                                      std::to_string(cert.N));
  return cert;
}

}  // namespace telepathy
