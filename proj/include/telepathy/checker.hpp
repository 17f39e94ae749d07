#pragma once

// Independent verifier for pipeline certificates. It relies only on word
// primitives (distance, binomial, hex) and the statement of the EKR theorem;
// every vertex set, census and bound is recomputed here from scratch.

#include <algorithm>
#include <array>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "word.hpp"

namespace telepathy {

struct CheckItem {
  std::string section;
  bool pass = true;
  std::string detail;
};

struct CheckReport {
  std::vector<CheckItem> items;
  std::uint64_t level_sum = 0;
  std::uint64_t total = 0;
  std::uint64_t chi_lower = 0;

  bool pass() const {
    return !items.empty() && std::all_of(items.begin(), items.end(), [](auto& i) { return i.pass; });
  }
  std::optional<CheckItem> first_failure() const {
    for (const auto& i : items)
      if (!i.pass) return i;
    return std::nullopt;
  }
};

namespace check_detail {

struct Line {
  std::size_t number = 0;
  std::vector<std::string> words;
  std::map<std::string, std::string> kv;

  const std::string& head() const { return words.front(); }
  bool has(const std::string& k) const { return kv.count(k) != 0; }
  const std::string& get(const std::string& k) const {
    auto it = kv.find(k);
    if (it == kv.end()) throw parse_error("line " + std::to_string(number) + ": missing " + k + "=");
    return it->second;
  }
  std::uint64_t num(const std::string& k) const { return to_u64(get(k), number); }

  // Value following a bare keyword, e.g. "bound 455".
  std::uint64_t after(const std::string& word) const {
    for (std::size_t i = 0; i + 1 < words.size(); ++i)
      if (words[i] == word) return to_u64(words[i + 1], number);
    throw parse_error("line " + std::to_string(number) + ": missing '" + word + " <int>'");
  }
  std::string after_word(const std::string& word) const {
    for (std::size_t i = 0; i + 1 < words.size(); ++i)
      if (words[i] == word) return words[i + 1];
    throw parse_error("line " + std::to_string(number) + ": missing '" + word + "'");
  }

  static std::uint64_t to_u64(const std::string& s, std::size_t number) {
    if (s.empty() || s.size() > 18 || s.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("line " + std::to_string(number) + ": bad integer '" + s + "'");
    return std::stoull(s);
  }
};

inline Line split(const std::string& text, std::size_t number) {
  Line l;
  l.number = number;
  std::istringstream in(text);
  for (std::string w; in >> w;) {
    l.words.push_back(w);
    auto eq = w.find('=');
    if (eq != std::string::npos && eq > 0) l.kv[w.substr(0, eq)] = w.substr(eq + 1);
  }
  return l;
}

struct TypeEntry {
  Line line;
  std::array<unsigned, 4> profile{};
  std::uint64_t a = 0, b = 0;
  std::string cover;
};

struct CaseEntry {
  Line line;
  std::string name;
  bits_t u = 0, v = 0;
  std::vector<TypeEntry> types;
  std::optional<std::uint64_t> value;
};

struct LevelEntry {
  Line line;
  unsigned k = 0;
  std::uint64_t bound = 0;
  std::string method;
  std::optional<Line> close;
  std::vector<CaseEntry> cases;
};

inline std::array<unsigned, 4> read_profile(const std::string& s, std::size_t number) {
  std::array<unsigned, 4> p{};
  char open = 0, c1 = 0, c2 = 0, c3 = 0, close = 0;
  std::istringstream in(s);
  if (!(in >> open >> p[0] >> c1 >> p[1] >> c2 >> p[2] >> c3 >> p[3] >> close) || open != '(' || close != ')' ||
      c1 != ',' || c2 != ',' || c3 != ',')
    throw parse_error("line " + std::to_string(number) + ": bad profile '" + s + "'");
  return p;
}

inline std::array<unsigned, 4> block_weights(bits_t w, bits_t u, bits_t v) {
  return {static_cast<unsigned>(std::popcount(w & u & ~v)), static_cast<unsigned>(std::popcount(w & u & v)),
          static_cast<unsigned>(std::popcount(w & v & ~u)), static_cast<unsigned>(std::popcount(w & ~u & ~v))};
}

inline std::string show(const std::array<unsigned, 4>& p) {
  return "(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "," + std::to_string(p[2]) + "," +
         std::to_string(p[3]) + ")";
}

// min over thresholds T of max(base + sum of a with b > T, base + 1 + T).
inline std::uint64_t split_minimum(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& rows,
                                   std::uint64_t base) {
  std::uint64_t all = 0;
  for (auto& r : rows) all += r.first;
  std::uint64_t best = base + all;
  for (auto& pivot : rows) {
    std::uint64_t rest = 0;
    for (auto& r : rows)
      if (r.second > pivot.second) rest += r.first;
    best = std::min(best, std::max(base + rest, base + 1 + pivot.second));
  }
  return best;
}

class Checker {
 public:
  explicit Checker(std::filesystem::path dir) : dir_(std::move(dir)) {}

  CheckReport run() {
    try {
      parse();
    } catch (const parse_error& e) {
      fail("parse", e.what());
      return report_;
    }
    check_graph();
    if (!report_.pass() && !report_.items.empty()) return report_;
    for (const auto& lv : levels_) check_level(lv);
    check_implication();
    check_totals();
    check_fixtures();
    return report_;
  }

 private:
  void ok(const std::string& section, const std::string& detail = "ok") { report_.items.push_back({section, true, detail}); }
  void fail(const std::string& section, const std::string& detail) {
    report_.items.push_back({section, false, detail});
  }
  bool expect(bool cond, const std::string& section, const std::string& detail) {
    if (!cond) fail(section, detail);
    return cond;
  }

  void parse() {
    std::ifstream in(dir_ / "certificate.txt");
    if (!in) throw parse_error("cannot open " + (dir_ / "certificate.txt").string());
    std::string text;
    std::size_t number = 0;
    if (!std::getline(in, text) || text != "TELEPATHY-CERT v1") throw parse_error("line 1: bad header");
    ++number;
    while (std::getline(in, text)) {
      ++number;
      auto l = split(text, number);
      if (l.words.empty()) continue;
      const auto& h = l.head();
      if (h == "note") continue;
      if (h == "graph") {
        N_ = static_cast<unsigned>(l.num("N"));
      } else if (h == "level") {
        LevelEntry lv;
        lv.line = l;
        if (l.words.size() < 6 || l.words[2] != "bound" || l.words[4] != "method")
          throw parse_error("line " + std::to_string(number) + ": malformed level line");
        lv.k = static_cast<unsigned>(Line::to_u64(l.words[1], number));
        lv.bound = l.after("bound");
        lv.method = l.after_word("method");
        levels_.push_back(std::move(lv));
      } else if (h == "split") {
        if (levels_.empty()) throw parse_error("line " + std::to_string(number) + ": split outside a level");
        levels_.back().close = l;
      } else if (h == "case") {
        if (levels_.empty() || l.words.size() < 2)
          throw parse_error("line " + std::to_string(number) + ": case outside a level");
        CaseEntry c;
        c.line = l;
        c.name = l.words[1];
        c.u = parse_hex(l.get("u"), N_).bits();
        c.v = parse_hex(l.get("v"), N_).bits();
        levels_.back().cases.push_back(std::move(c));
      } else if (h == "type") {
        if (levels_.empty() || levels_.back().cases.empty())
          throw parse_error("line " + std::to_string(number) + ": type outside a case");
        TypeEntry t;
        t.line = l;
        t.profile = read_profile(l.get("profile"), number);
        t.a = l.num("a");
        t.b = l.num("b");
        t.cover = l.get("cover");
        levels_.back().cases.back().types.push_back(std::move(t));
      } else if (h == "combinator") {
        bool found = false;
        if (!levels_.empty())
          for (auto& c : levels_.back().cases)
            if (c.name == l.get("case")) c.value = l.num("value"), found = true;
        if (!found) throw parse_error("line " + std::to_string(number) + ": combinator for unknown case");
      } else if (h == "fixture") {
        fixtures_.push_back(l);
      } else if (h == "total") {
        total_ = l.num("M");
      } else if (h == "chi-lower") {
        if (l.words.size() != 2) throw parse_error("line " + std::to_string(number) + ": malformed chi-lower");
        chi_ = Line::to_u64(l.words[1], number);
      } else {
        throw parse_error("line " + std::to_string(number) + ": unknown record '" + h + "'");
      }
    }
    if (!total_) throw parse_error("missing total line");
    if (!chi_) throw parse_error("missing chi-lower line");
  }

  void check_graph() {
    if (!expect(is_power_of_two(N_) && N_ >= 4 && N_ <= 16, "graph", "N must be 4, 8 or 16")) return;
    std::vector<unsigned> want, have;
    for (unsigned k = 0; 2 * k < N_; k += 2) want.push_back(k);
    for (const auto& lv : levels_) have.push_back(lv.k);
    if (expect(want == have, "graph", "levels must be the even weights below N/2 in order")) ok("graph");
  }

  std::vector<bits_t> level_words(unsigned k) const { return words_of_weight(N_, k); }

  void check_level(const LevelEntry& lv) {
    const std::string sec = "level " + std::to_string(lv.k);
    if (lv.method == "trivial") {
      if (expect(lv.k == 0 && lv.bound == 1, sec, "trivial bound applies to level 0 with value 1")) ok(sec);
    } else if (lv.method == "edgeless") {
      auto ws = level_words(lv.k);
      for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = i + 1; j < ws.size(); ++j)
          if (hamming(ws[i], ws[j]) == N_ / 2) return fail(sec, "edge between " + to_hex(ws[i], N_) + " and " + to_hex(ws[j], N_));
      if (expect(lv.bound == ws.size(), sec, "edgeless bound must equal the level size " + std::to_string(ws.size())))
        ok(sec);
    } else if (lv.method == "ekr") {
      auto n = static_cast<unsigned>(lv.line.num("n")), k = static_cast<unsigned>(lv.line.num("k")),
           t = static_cast<unsigned>(lv.line.num("t"));
      if (!check_ekr(sec, n, k, t, lv.k, lv.bound)) return;
      ok(sec);
    } else if (lv.method == "cover") {
      auto ws = level_words(lv.k);
      auto b = check_cover(lv.line.get("cover"), lv.k, std::set<bits_t>(ws.begin(), ws.end()));
      if (b && expect(*b == lv.bound, sec, "bound differs from the cover size " + std::to_string(*b))) ok(sec);
    } else if (lv.method == "case-split") {
      check_case_split(lv);
    } else {
      fail(sec, "unknown method '" + lv.method + "'");
    }
    report_.level_sum += lv.bound;
  }

  // EKR: n >= (k-t+1)(t+1), adjacency in the level is exactly "share < t
  // positions", and the bound is binomial(n-t, k-t).
  // For the close case of a split the family is defined by "share >= t", so
  // the adjacency test is skipped.
  bool check_ekr(const std::string& sec, unsigned n, unsigned k, unsigned t, unsigned level, std::uint64_t bound,
                 bool match_adjacency = true) {
    if (!expect(t >= 1 && t <= k && k <= n && n >= (k - t + 1) * (t + 1), sec,
                "EKR precondition n >= (k-t+1)(t+1) violated for n=" + std::to_string(n) + " k=" + std::to_string(k) +
                    " t=" + std::to_string(t)))
      return false;
    if (!expect(n == N_ && k == level, sec, "EKR parameters must be n=N and k=level")) return false;
    auto ws = match_adjacency ? level_words(level) : std::vector<bits_t>{};
    for (std::size_t i = 0; i < ws.size(); ++i)
      for (std::size_t j = i + 1; j < ws.size(); ++j) {
        bool adjacent = hamming(ws[i], ws[j]) == N_ / 2;
        bool far = static_cast<unsigned>(std::popcount(ws[i] & ws[j])) < t;
        if (adjacent != far)
          return expect(false, sec, "adjacency is not 'fewer than t shared positions' at " + to_hex(ws[i], N_));
      }
    return expect(bound == binomial(n - t, k - t), sec, "EKR bound must be " + std::to_string(binomial(n - t, k - t)));
  }

  void check_case_split(const LevelEntry& lv) {
    const std::string sec = "level " + std::to_string(lv.k);
    if (!expect(N_ == 16 && lv.k == 6, sec, "case split is defined for N=16, level 6")) return;
    // Every non-adjacent pair shares >= 3 positions or sits at distance 10 / 12.
    auto ws = level_words(6);
    for (std::size_t i = 0; i < ws.size(); ++i)
      for (std::size_t j = i + 1; j < ws.size(); ++j) {
        unsigned d = hamming(ws[i], ws[j]);
        unsigned shared = std::popcount(ws[i] & ws[j]);
        bool covered = d == 8 || shared >= 3 || d == 10 || d == 12;
        if (!covered) return fail(sec, "pair outside the three cases at " + to_hex(ws[i], N_));
      }
    if (!lv.close) return fail("split close", "missing");
    std::uint64_t close_bound = lv.close->after("bound");
    if (!check_ekr("split close", static_cast<unsigned>(lv.close->num("n")), static_cast<unsigned>(lv.close->num("k")),
                   static_cast<unsigned>(lv.close->num("t")), 6, close_bound, false))
      return;
    if (!expect(static_cast<unsigned>(lv.close->num("t")) == 3, "split close", "close case needs t=3")) return;
    ok("split close");

    std::uint64_t best = close_bound;
    std::set<unsigned> dists;
    for (const auto& c : lv.cases) {
      auto v = check_pair_case(c);
      if (!v) return;
      dists.insert(hamming(c.u, c.v));
      best = std::max(best, *v);
    }
    if (!expect(dists == std::set<unsigned>{10, 12}, sec, "cases must cover distance 12 and distance 10")) return;
    if (expect(best == lv.bound, sec, "level bound must be max of the case values = " + std::to_string(best))) ok(sec);
  }

  std::optional<std::uint64_t> check_pair_case(const CaseEntry& c) {
    const std::string sec = "case " + c.name;
    unsigned d = hamming(c.u, c.v);
    if (!expect(std::popcount(c.u) == 6 && std::popcount(c.v) == 6 && (d == 10 || d == 12), sec,
                "u, v must be weight-6 words at distance 10 or 12"))
      return std::nullopt;

    std::map<std::array<unsigned, 4>, std::uint64_t> census;
    for (bits_t w : level_words(6)) {
      if (w == c.u || w == c.v || hamming(w, c.u) == 8 || hamming(w, c.v) == 8) continue;
      ++census[block_weights(w, c.u, c.v)];
    }
    std::map<std::array<unsigned, 4>, const TypeEntry*> listed;
    for (const auto& t : c.types) {
      const std::string tsec = "type profile=" + show(t.profile) + " case " + c.name;
      if (!expect(!listed.count(t.profile), tsec, "duplicate type")) return std::nullopt;
      listed[t.profile] = &t;
      auto it = census.find(t.profile);
      if (!expect(it != census.end(), tsec, "no survivor has this profile")) return std::nullopt;
      if (!expect(it->second == t.a, tsec, "a=" + std::to_string(t.a) + " but census counts " + std::to_string(it->second)))
        return std::nullopt;
    }
    for (const auto& [p, count] : census)
      if (!expect(listed.count(p), sec, "census profile " + show(p) + " (" + std::to_string(count) + " vertices) has no type"))
        return std::nullopt;

    std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
    for (const auto& t : c.types) {
      auto b = check_type_cover(c, t);
      if (!b) return std::nullopt;
      rows.emplace_back(t.a, *b);
    }
    auto value = split_minimum(rows, 2);
    if (!expect(c.value.has_value(), "combinator case=" + c.name, "missing")) return std::nullopt;
    if (!expect(*c.value == value, "combinator case=" + c.name,
                "claimed " + std::to_string(*c.value) + ", recomputed " + std::to_string(value)))
      return std::nullopt;
    ok(sec);
    return value;
  }

  std::optional<std::uint64_t> check_type_cover(const CaseEntry& c, const TypeEntry& t) {
    const std::string tsec = "type profile=" + show(t.profile) + " case " + c.name;
    std::ifstream in(dir_ / t.cover);
    if (!in) return fail("cover " + t.cover, "missing file"), std::nullopt;
    std::string header;
    std::getline(in, header);
    auto h = split(header, 1);
    bits_t w;
    try {
      if (h.words.size() < 2 || h.words[0] != "COVER" || h.words[1] != "v1") throw parse_error("bad header");
      if (h.num("N") != N_ || h.num("level") != 6) throw parse_error("header must say N=" + std::to_string(N_) + " level=6");
      if (parse_hex(h.get("u"), N_).bits() != c.u || parse_hex(h.get("v"), N_).bits() != c.v)
        throw parse_error("u, v differ from the case");
      w = parse_hex(h.get("w"), N_).bits();
    } catch (const std::exception& e) {
      return fail("cover " + t.cover, e.what()), std::nullopt;
    }
    if (!expect(std::popcount(w) == 6 && w != c.u && w != c.v && hamming(w, c.u) != 8 && hamming(w, c.v) != 8,
                "cover " + t.cover, "w=" + to_hex(w, N_) + " is not a survivor of u, v"))
      return std::nullopt;
    if (!expect(block_weights(w, c.u, c.v) == t.profile, "cover " + t.cover, "w does not have the type's profile"))
      return std::nullopt;
    std::set<bits_t> survivors;
    for (bits_t x : level_words(6))
      if (x != c.u && x != c.v && x != w && hamming(x, c.u) != 8 && hamming(x, c.v) != 8 && hamming(x, w) != 8)
        survivors.insert(x);
    auto b = check_cover_body(t.cover, in, survivors);
    if (!b) return std::nullopt;
    if (!expect(*b == t.b, tsec, "b=" + std::to_string(t.b) + " but the cover has " + std::to_string(*b) + " cliques"))
      return std::nullopt;
    return b;
  }

  std::optional<std::uint64_t> check_cover(const std::string& rel, unsigned level, const std::set<bits_t>& vertices) {
    std::ifstream in(dir_ / rel);
    if (!in) return fail("cover " + rel, "missing file"), std::nullopt;
    std::string header;
    std::getline(in, header);
    auto h = split(header, 1);
    try {
      if (h.words.size() < 2 || h.words[0] != "COVER" || h.words[1] != "v1") throw parse_error("bad header");
      if (h.num("N") != N_ || h.num("level") != level) throw parse_error("header does not match the level");
    } catch (const std::exception& e) {
      return fail("cover " + rel, e.what()), std::nullopt;
    }
    return check_cover_body(rel, in, vertices);
  }

  // Cliques must partition `vertices` with every within-clique pair at N/2.
  std::optional<std::uint64_t> check_cover_body(const std::string& rel, std::istream& in, const std::set<bits_t>& vertices) {
    std::set<bits_t> seen;
    std::uint64_t cliques = 0;
    std::string text;
    std::size_t number = 1;
    while (std::getline(in, text)) {
      ++number;
      const std::string loc = "cover " + rel + " line " + std::to_string(number);
      std::vector<bits_t> clique;
      std::istringstream ls(text);
      try {
        for (std::string tok; ls >> tok;) clique.push_back(parse_hex(tok, N_).bits());
      } catch (const std::exception& e) {
        return fail(loc, e.what()), std::nullopt;
      }
      if (clique.empty()) continue;
      ++cliques;
      for (std::size_t i = 0; i < clique.size(); ++i) {
        if (!vertices.count(clique[i])) return fail(loc, to_hex(clique[i], N_) + " is not a vertex of the graph"), std::nullopt;
        if (!seen.insert(clique[i]).second) return fail(loc, to_hex(clique[i], N_) + " appears twice"), std::nullopt;
        for (std::size_t j = 0; j < i; ++j)
          if (hamming(clique[i], clique[j]) != N_ / 2)
            return fail(loc, to_hex(clique[j], N_) + " and " + to_hex(clique[i], N_) + " are not adjacent"), std::nullopt;
      }
    }
    if (seen.size() != vertices.size()) {
      for (bits_t x : vertices)
        if (!seen.count(x)) return fail("cover " + rel, "vertex " + to_hex(x, N_) + " is not covered"), std::nullopt;
    }
    return cliques;
  }

  void check_totals() {
    report_.total = 4 * report_.level_sum;
    report_.chi_lower = report_.total ? ((std::uint64_t{1} << N_) + report_.total - 1) / report_.total : 0;
    if (!expect(*total_ == report_.total, "total", "M=" + std::to_string(*total_) + " but 4 x level sum = " +
                                                       std::to_string(report_.total)))
      return;
    if (!expect(*chi_ == report_.chi_lower, "chi-lower",
                "claimed " + std::to_string(*chi_) + ", ceil(2^N / M) = " + std::to_string(report_.chi_lower)))
      return;
    ok("total");
  }

  void check_fixtures() {
    for (const auto& f : fixtures_) {
      const bool is_total = f.words.size() > 1 && f.words[1] == "total";
      const std::string sec = "fixture " + (is_total ? std::string("total") : f.has("case") ? f.get("case") : "?");
      try {
        if (is_total) {
          std::uint64_t sum = 0;
          std::istringstream ls(f.get("levels"));
          for (std::string tok; std::getline(ls, tok, ',');) sum += Line::to_u64(tok, f.number);
          std::uint64_t m = f.num("M");
          if (!expect(m == 4 * sum, sec, "M must be 4 x sum of levels")) continue;
          if (!expect(f.num("chi-lower") == ((std::uint64_t{1} << N_) + m - 1) / m, sec, "chi-lower mismatch")) continue;
        } else {
          std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
          std::istringstream ls(f.get("rows"));
          for (std::string tok; std::getline(ls, tok, ',');) {
            auto colon = tok.find(':');
            if (colon == std::string::npos) throw parse_error("bad fixture row '" + tok + "'");
            rows.emplace_back(Line::to_u64(tok.substr(0, colon), f.number), Line::to_u64(tok.substr(colon + 1), f.number));
          }
          auto v = split_minimum(rows, f.num("base"));
          if (!expect(v == f.num("value"), sec, "claimed " + f.get("value") + ", recomputed " + std::to_string(v))) continue;
        }
        ok(sec);
      } catch (const parse_error& e) {
        fail(sec, e.what());
      }
    }
  }

  // Uses the certificate's own claim; check_totals ties the claim to the levels.
  void check_implication() {
    // M < 2^N / N  <=>  ceil(2^N / M) > N  <=>  chi(G_N) > N.
    const std::uint64_t m = *total_;
    if (expect(m > 0 && m * N_ < (std::uint64_t{1} << N_) && *chi_ > N_, "final implication",
               "M=" + std::to_string(m) + ", chi-lower " + std::to_string(*chi_) + " do not force chi > " +
                   std::to_string(N_)))
      ok("final implication", "M=" + std::to_string(m) + " < " + std::to_string((1U << N_) / N_) + " => chi >= " +
                                  std::to_string(*chi_));
  }

  std::filesystem::path dir_;
  unsigned N_ = 0;
  std::vector<LevelEntry> levels_;
  std::vector<Line> fixtures_;
  std::optional<std::uint64_t> total_, chi_;
  CheckReport report_;
};

}  // namespace check_detail

inline CheckReport check_certificate(const std::filesystem::path& dir) { return check_detail::Checker(dir).run(); }

}  // namespace telepathy
