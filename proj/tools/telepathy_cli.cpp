// Command-line front end: certificate generation and checking, type tables,
// coloring search, independence numbers, game evaluation and the quantum
// protocol check.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "telepathy/telepathy.hpp"

namespace fs = std::filesystem;
using namespace telepathy;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct CoverFlags {
  std::uint64_t seed = 0;
  unsigned restarts = 4;
  unsigned refine = 1500;
  unsigned jobs = 1;

  BoundOptions bounds() const { return {{seed, restarts, refine}, jobs}; }
};

void add_cover_flags(CLI::App* app, CoverFlags& f) {
  app->add_option("--seed", f.seed, "Seed for randomized tie-breaking")->capture_default_str();
  app->add_option("--restarts", f.restarts, "Greedy restarts per rule")->capture_default_str();
  app->add_option("--refine", f.refine, "Iterated-greedy refinement passes")->capture_default_str();
  app->add_option("--jobs", f.jobs, "Parallel cover jobs")->capture_default_str()->check(CLI::Range(1U, 256U));
}

void print_report(const CheckReport& rep) {
  for (const auto& item : rep.items)
    std::cout << (item.pass ? "PASS " : "FAIL ") << item.section << ": " << item.detail << '\n';
}

int cmd_check(const fs::path& dir) {
  auto rep = check_certificate(dir);
  print_report(rep);
  if (auto f = rep.first_failure()) {
    std::cerr << "certificate rejected at " << f->section << ": " << f->detail << '\n';
    return kFail;
  }
  std::cout << "certificate verified: M=" << rep.total << ", chi >= " << rep.chi_lower << '\n';
  return kOk;
}

int cmd_verify(unsigned n, const fs::path& out, const CoverFlags& flags) {
  PipelineOptions opt{n, flags.bounds()};
  try {
    auto cert = run_pipeline(opt, out);
    for (const auto& sec : cert.levels)
      std::cout << "level " << sec.k << ": M <= " << sec.bound.value << " (" << to_string(sec.bound.method) << ")\n";
    std::cout << "total M=" << cert.total << ", chi-lower " << cert.chi_lower_bound << '\n';
  } catch (const pipeline_error& e) {
    std::cerr << "pipeline failed at " << e.what() << '\n';
    return kFail;
  }
  return cmd_check(out);
}

int cmd_tables(unsigned dist, const CoverFlags& flags, bool with_covers) {
  auto [u, v] = canonical_pair(dist);
  auto part = block_partition(u, v);
  std::vector<TypeRecord> types = enumerate_types(u, v, 6);
  std::optional<PairCase> pc;
  if (with_covers) pc = analyse_pair(build_level_graph(16, 6), u, v, flags.bounds());

  std::vector<CombinatorEntry> reference_rows;
  auto ref_row = [&](unsigned idx) -> const reference::TypeRow& {
    return dist == 12 ? reference::d12_types[idx - 1] : reference::d10_types[idx - 1];
  };

  std::cout << "pair u=" << to_hex(u) << " v=" << to_hex(v) << " distance " << dist << ", block sizes ("
            << part.sizes()[0] << "," << part.sizes()[1] << "," << part.sizes()[2] << "," << part.sizes()[3] << ")\n";
  std::cout << std::left << std::setw(12) << "profile" << std::setw(7) << "rep" << std::right << std::setw(6) << "a"
            << std::setw(9) << "listed" << std::setw(7) << "ref a" << std::setw(7) << "ref b";
  if (pc) std::cout << std::setw(7) << "b";
  std::cout << "  note\n";
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < types.size(); ++i) {
    const auto& t = types[i];
    total += t.orbit_size;
    std::cout << std::left << std::setw(12) << to_string(t.profile) << std::setw(7) << to_hex(t.representative)
              << std::right << std::setw(6) << t.orbit_size;
    if (t.listed_index) {
      const auto& row = ref_row(*t.listed_index);
      reference_rows.push_back({row.a, row.b});
      std::cout << std::setw(9) << *t.listed_index << std::setw(7) << row.a << std::setw(7) << row.b;
    } else {
      std::cout << std::setw(9) << "-" << std::setw(7) << "-" << std::setw(7) << "-";
    }
    if (pc) std::cout << std::setw(7) << pc->types[i].b;
    std::cout << "  ";
    if (t.mirror_of) std::cout << "mirror of " << to_string(*t.mirror_of);
    else if (t.self_mirror()) std::cout << "self-mirror";
    std::cout << '\n';
  }
  std::cout << "types " << types.size() << ", survivors " << total << '\n';
  auto ref = combinator_transcript(reference_rows, 2);
  std::cout << "reference rows: combinator " << ref.value << " (sum arm " << ref.sum_arm << ", max arm " << ref.max_arm
            << ")\n";
  if (pc)
    std::cout << "regenerated covers, all profiles: combinator " << pc->combinator.value << " (sum arm "
              << pc->combinator.sum_arm << ", max arm " << pc->combinator.max_arm << ")\n";
  return kOk;
}

int cmd_color(unsigned n, std::optional<unsigned> max_colors, std::uint64_t seed, std::uint64_t budget,
              unsigned restarts, const std::string& out) {
  const unsigned N = 1U << n;
  auto res = find_coloring(N, max_colors.value_or(N), seed, budget, restarts);
  std::cout << "N=" << N << " colors<=" << max_colors.value_or(N) << ": " << to_string(res.status) << " after "
            << res.nodes << " assignments\n";
  if (res.status != SearchStatus::found) return kFail;
  std::cout << "coloring uses " << res.coloring->colors << " colors, proper\n";
  if (!out.empty()) {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    write_coloring(f, *res.coloring);
  }
  return kOk;
}

int cmd_alpha(unsigned n, std::optional<unsigned> level, const std::string& component, std::uint64_t max_nodes) {
  const unsigned N = 1U << n;
  LevelGraph g;
  if (level) {
    g = build_level_graph(N, *level);
    if (!component.empty() && (*level % 2 == 0) != (component == "even"))
      throw usage_error("level " + std::to_string(*level) + " is not in the " + component + " component");
  } else if (!component.empty()) {
    g = build_component_graph(N, component == "even" ? 0 : 1);
  } else {
    g = build_full_graph(N);
  }
  AlphaBudget budget;
  budget.max_nodes = max_nodes;
  auto cover = greedy_clique_cover(g, 0, 4, CoverRule::keep_candidates);
  try {
    auto r = exact_alpha(g, budget);
    std::cout << "vertices " << g.size() << ", edges " << g.adjacency.edge_count() << '\n';
    std::cout << "alpha " << r.size << " (greedy cover bound " << cover.size() << ", " << r.nodes << " nodes)\n";
    std::cout << "witness";
    for (auto i : r.witness) std::cout << ' ' << to_hex(g.vertices[i]);
    std::cout << '\n';
  } catch (const resource_error& e) {
    std::cerr << "alpha: " << e.what() << " (greedy cover bound " << cover.size() << ")\n";
    return kFail;
  }
  return kOk;
}

int cmd_game(unsigned n, const std::string& strategy, const std::string& mode, unsigned jobs) {
  Strategy s;
  if (strategy.rfind("hash:", 0) == 0) {
    s = hash_strategy(std::stoull(strategy.substr(5)), n);
  } else if (strategy.rfind("coloring:", 0) == 0) {
    std::ifstream in(strategy.substr(9));
    if (!in) throw usage_error("cannot open coloring file " + strategy.substr(9));
    auto c = read_coloring(in);
    if (c.N != (1U << n)) throw usage_error("coloring file is for N=" + std::to_string(c.N));
    s = strategy_from_coloring(c);
  } else {
    throw usage_error("strategy must be coloring:FILE or hash:SEED");
  }
  EvalMode m = EvalMode::all(jobs);
  if (mode.rfind("sample:", 0) == 0) m = EvalMode::sample(std::stoull(mode.substr(7)), 0);
  else if (mode != "exhaustive") throw usage_error("mode must be exhaustive or sample:K");

  auto r = evaluate_strategy(s, m);
  std::cout << (m.exhaustive ? "exhaustive" : "sampled") << " over " << r.cases_equal + r.cases_distinct
            << " cases\n";
  std::cout << "win " << to_string(r.overall()) << " (" << std::setprecision(10) << r.overall().value() << ")\n";
  std::cout << "equal questions " << to_string(r.equal()) << ", distinct questions " << to_string(r.distinct())
            << '\n';
  std::cout << (r.perfect() ? "perfect strategy\n" : "strategy loses on some promised pair\n");
  return kOk;
}

int cmd_quantum(unsigned n, bool summary_only) {
  auto rep = verify_protocol(n);
  if (!summary_only)
    for (const auto& c : rep.classes)
      std::cout << "z=" << to_hex(c.z) << " P(equal)=" << to_string(c.p_equal) << " verdict=" << (c.pass ? "pass" : "fail")
                << '\n';
  std::cout << "summary n=" << n << " classes=" << rep.classes.size() << " failures=" << rep.failures
            << " invariance=" << (rep.invariance_ok ? "ok" : "broken") << " referee=" << (rep.referee_ok ? "ok" : "lost")
            << " verdict=" << (rep.pass() ? "pass" : "fail") << '\n';
  return rep.pass() ? kOk : kFail;
}

int cmd_reduction(unsigned n) {
  auto r = validate_reduction(1U << n);
  std::cout << "N=" << r.N << '\n'
            << "parity classes edge-free: " << (r.parity_edge_free ? "yes" : "no") << '\n'
            << "alpha(G) = " << r.alpha_full << '\n'
            << "alpha(even) = " << r.alpha_even << ", alpha(odd) = " << r.alpha_odd << '\n'
            << "alpha(even, weight < N/2) = " << r.alpha_lower << '\n'
            << "alpha(weight N/2 level) = " << r.alpha_middle << '\n'
            << "alpha(G) = 2 alpha(even): " << (r.components_identity() ? "holds" : "fails") << '\n'
            << "2 alpha(even) = 4 alpha(lower): " << (r.lower_identity() ? "holds" : "fails") << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classical impossibility certificate and quantum protocol checks for the Hamming-distance game"};
  app.require_subcommand(1);

  CoverFlags cover_flags;

  unsigned verify_n = 4;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "Build the certificate for n and check it");
  verify->add_option("--n", verify_n, "Answer bits n (N = 2^n)")->check(CLI::Range(2U, 4U))->capture_default_str();
  verify->add_option("--out", verify_out, "Output directory (default $TELEPATHY_OUT or ./certificate)");
  add_cover_flags(verify, cover_flags);

  std::string check_dir;
  auto* check = app.add_subcommand("check", "Independently verify a certificate directory");
  check->add_option("dir", check_dir, "Certificate directory")->required();

  unsigned tables_dist = 12;
  bool no_covers = false;
  auto* tables = app.add_subcommand("tables", "Third-vertex type tables for a canonical pair");
  tables->add_option("--dist", tables_dist, "Pair distance")->check(CLI::IsMember({10U, 12U}))->capture_default_str();
  tables->add_flag("--no-covers", no_covers, "Skip cover generation");
  add_cover_flags(tables, cover_flags);

  unsigned color_n = 3;
  std::optional<unsigned> max_colors;
  std::uint64_t color_seed = 0, color_budget = 1'000'000;
  unsigned color_restarts = 4;
  std::string color_out;
  auto* color = app.add_subcommand("color", "Search for a proper coloring of G_N with at most N colors");
  color->add_option("--n", color_n, "Answer bits n (N = 2^n)")->check(CLI::Range(1U, 4U))->capture_default_str();
  color->add_option("--max-colors", max_colors, "Color limit (default N)");
  color->add_option("--seed", color_seed)->capture_default_str();
  color->add_option("--budget", color_budget, "Assignment steps across all restarts")->capture_default_str();
  color->add_option("--restarts", color_restarts)->capture_default_str();
  color->add_option("--out", color_out, "Write the coloring file here");

  unsigned alpha_n = 2;
  std::optional<unsigned> alpha_level;
  std::string alpha_component;
  std::uint64_t alpha_nodes = 200'000'000;
  auto* alpha = app.add_subcommand("alpha", "Exact independence number of G_N or a part of it");
  alpha->add_option("--n", alpha_n, "Answer bits n (N = 2^n)")->check(CLI::Range(1U, 4U))->capture_default_str();
  alpha->add_option("--level", alpha_level, "Restrict to one weight level");
  alpha->add_option("--component", alpha_component, "Restrict to one parity component")
      ->check(CLI::IsMember({"even", "odd"}));
  alpha->add_option("--max-nodes", alpha_nodes, "Search node budget")->capture_default_str();

  unsigned game_n = 4, game_jobs = 1;
  std::string game_strategy, game_mode = "exhaustive";
  auto* game = app.add_subcommand("game", "Evaluate a classical strategy");
  game->add_option("--n", game_n, "Answer bits n (N = 2^n)")->check(CLI::Range(1U, 4U))->capture_default_str();
  game->add_option("--strategy", game_strategy, "coloring:FILE or hash:SEED")->required();
  game->add_option("--mode", game_mode, "exhaustive or sample:K")->capture_default_str();
  game->add_option("--jobs", game_jobs)->check(CLI::Range(1U, 256U))->capture_default_str();

  unsigned quantum_n = 4;
  bool summary_only = false;
  auto* quantum = app.add_subcommand("quantum", "Exact simulation of the entangled protocol");
  quantum->add_option("--n", quantum_n, "Answer bits n")->check(CLI::Range(1U, 4U))->capture_default_str();
  quantum->add_flag("--summary-only", summary_only, "Print only the summary line");

  unsigned reduction_n = 2;
  auto* reduction = app.add_subcommand("validate-reduction", "Audit the x4 reduction exactly on small N");
  reduction->add_option("--n", reduction_n, "Answer bits n (N = 2^n)")->check(CLI::Range(2U, 3U))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*verify) {
      if (verify_out.empty()) {
        const char* env = std::getenv("TELEPATHY_OUT");
        verify_out = env ? env : "certificate";
      }
      return cmd_verify(verify_n, verify_out, cover_flags);
    }
    if (*check) return cmd_check(check_dir);
    if (*tables) return cmd_tables(tables_dist, cover_flags, !no_covers);
    if (*color) return cmd_color(color_n, max_colors, color_seed, color_budget, color_restarts, color_out);
    if (*alpha) return cmd_alpha(alpha_n, alpha_level, alpha_component, alpha_nodes);
    if (*game) return cmd_game(game_n, game_strategy, game_mode, game_jobs);
    if (*quantum) return cmd_quantum(quantum_n, summary_only);
    if (*reduction) return cmd_reduction(reduction_n);
  } catch (const usage_error& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
