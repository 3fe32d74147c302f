// apg: command-line front end for the achievement positional game library.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "apg/apg.hpp"

namespace {

using namespace apg;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 2;
constexpr int kExitLimit = 3;
constexpr int kExitUsage = 64;

const std::map<std::string, Player> kPlayers{{"left", Player::Left}, {"right", Player::Right}};

void print_kv(std::ostream& os, const std::string& k, const std::string& v) { os << k << ": " << v << "\n"; }

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Usage, path + ": cannot write");
  out << text;
}

int report_exit(const std::vector<Report>& reports) {
  bool limited = false, failed = false;
  for (const auto& r : reports) {
    limited |= r.resource_limited;
    failed |= r.failures > 0;
  }
  return limited ? kExitLimit : failed ? kExitVerify : kExitOk;
}

int cmd_solve(const std::string& file, Player first, const std::string& algo, bool trace) {
  const Game g = load_apg(file);
  const bool small = fits22(g.board());
  if (algo == "poly22" && !small) throw Error(ErrorKind::EdgeTooLarge, file + ": poly22 needs edges of size at most 2");
  const bool use22 = algo == "poly22" || (algo == "auto" && small);
  print_kv(std::cout, "file", file);
  print_kv(std::cout, "first", to_string(first));
  print_kv(std::cout, "algo", use22 ? "poly22" : "search");
  Solver solver;
  if (use22) {
    print_kv(std::cout, "result", to_string(solve22(g, first)));
  } else {
    print_kv(std::cout, "result", to_string(solver.solve(g, first)));
    print_kv(std::cout, "nodes", std::to_string(solver.stats().nodes_expanded));
    print_kv(std::cout, "memo_hits", std::to_string(solver.stats().memo_hits));
  }
  if (trace) std::cout << solver.self_play(g, first).to_text();
  return kExitOk;
}

int cmd_outcome(const std::string& file) {
  const Game g = load_apg(file);
  Solver solver;
  const Outcome o = solver.outcome(g);
  print_kv(std::cout, "file", file);
  print_kv(std::cout, "left_first", to_string(o.when_left_starts()));
  print_kv(std::cout, "right_first", to_string(o.when_right_starts()));
  print_kv(std::cout, "outcome", o.name());
  return kExitOk;
}

int cmd_delay(const std::string& file, Player p) {
  const Game g = load_apg(file);
  print_kv(std::cout, "file", file);
  print_kv(std::cout, "player", to_string(p));
  print_kv(std::cout, "delay", Solver().delay(g, p).to_string());
  return kExitOk;
}

int cmd_union(const std::string& f1, const std::string& f2, bool check) {
  const Game a = load_apg(f1), b = load_apg(f2);
  Solver solver;
  const Outcome oa = solver.outcome(a), ob = solver.outcome(b);
  const auto u = disjoint_union(a, b);
  const Outcome ou = solver.outcome(u.game);
  print_kv(std::cout, "outcome_1", oa.name());
  print_kv(std::cout, "outcome_2", ob.name());
  print_kv(std::cout, "outcome_union", ou.name());
  for (const auto& [from, to] : u.renames) print_kv(std::cout, "renamed", from + " -> " + to);
  if (!check) return kExitOk;
  std::string allowed;
  for (auto k : Outcome::all_kinds())
    if (union_cell(oa, ob).contains(k)) allowed += (allowed.empty() ? "" : " ") + std::string(Outcome(k).name());
  print_kv(std::cout, "table3_allowed", allowed);
  const bool ok = verify_union_cell(oa, ob, ou);
  print_kv(std::cout, "table3", ok ? "ok" : "violation");
  return ok ? kExitOk : kExitVerify;
}

int cmd_gadget(const std::string& kind, int k, const std::string& color, const std::string& outcome,
               const std::string& out) {
  if (color != "blue" && color != "red") throw Error(ErrorKind::Usage, "--color must be blue or red");
  const Player owner = color == "blue" ? Player::Left : Player::Right;
  Game g;
  if (kind == "butterfly") {
    g = butterfly(owner);
  } else if (kind == "wk") {
    g = w_k(k, owner);
  } else {
    const auto o = Outcome::parse(outcome);
    if (!o) throw Error(ErrorKind::Usage, "--outcome must be one of L, L-, N, D, R-, R");
    g = outcome_exemplar(*o);
  }
  save_apg(g, out);
  print_kv(std::cout, "gadget", kind);
  print_kv(std::cout, "vertices", std::to_string(g.num_vertices()));
  print_kv(std::cout, "blue_edges", std::to_string(g.blue_edges().size()));
  print_kv(std::cout, "red_edges", std::to_string(g.red_edges().size()));
  print_kv(std::cout, "written", out);
  return kExitOk;
}

int cmd_reduce(const std::string& kind, const std::string& cnf, const std::string& out, const std::string& prov) {
  const CnfFormula f = load_dimacs(cnf);
  ReductionOutput r;
  if (kind == "sat23") {
    r = sat_to_23(f);
  } else if (kind == "sat32") {
    r = sat_to_32(f);
  } else {
    r = qbf_to_33(QbfFormula::from_cnf(f));
  }
  save_apg(r.game, out);
  if (!prov.empty()) write_text(prov, r.provenance_text());
  print_kv(std::cout, "reduction", kind);
  print_kv(std::cout, "variables", std::to_string(f.num_vars));
  print_kv(std::cout, "clauses", std::to_string(f.clauses.size()));
  print_kv(std::cout, "vertices", std::to_string(r.game.num_vertices()));
  print_kv(std::cout, "blue_edges", std::to_string(r.game.blue_edges().size()));
  print_kv(std::cout, "red_edges", std::to_string(r.game.red_edges().size()));
  for (const auto& n : r.notes) print_kv(std::cout, "note", n);
  print_kv(std::cout, "written", out);
  return kExitOk;
}

int cmd_embed(const std::string& file, const std::string& out) {
  const Game g = load_apg(file);
  const auto emb = mm_rank4_embed(g);
  const Game mm = maker_maker_game(emb.h);
  save_apg(mm, out);
  print_kv(std::cout, "embedding", "mm4");
  print_kv(std::cout, "vertices", std::to_string(mm.num_vertices()));
  print_kv(std::cout, "edges", std::to_string(emb.h.edges.size()));
  print_kv(std::cout, "u_left", mm.name(emb.u_left));
  print_kv(std::cout, "u_right", mm.name(emb.u_right));
  print_kv(std::cout, "written", out);
  return kExitOk;
}

int cmd_verify(const std::string& what, std::uint64_t seed, int trials, bool orbits) {
  std::vector<Report> reports;
  if (what == "lemmas") {
    const int t = trials > 0 ? trials : 1000;
    reports.push_back(verify_lemmas(seed, t));
    reports.push_back(verify_outcome_legality(seed, t));
  } else if (what == "table3") {
    const int t = trials > 0 ? trials : 2000;
    reports.push_back(verify_union(seed, t));
    reports.push_back(verify_delay(seed, std::max(1, t / 4)));
  } else if (what == "poly22") {
    reports.push_back(verify_poly22(seed, trials > 0 ? trials : 10000, 4, orbits ? 5 : 0));
  } else {
    reports.push_back(verify_sat_reductions());
    reports.push_back(verify_qbf_reduction());
    reports.push_back(verify_rank4_embedding(seed, trials > 0 ? trials : 200));
    reports.push_back(verify_transversal_embedding());
  }
  print_kv(std::cout, "seed", std::to_string(seed));
  for (std::size_t i = 0; i < reports.size(); ++i) std::cout << (i ? "\n" : "") << reports[i].to_text();
  return report_exit(reports);
}

int cmd_bench() {
  using Clock = std::chrono::steady_clock;
  auto run = [](const std::string& name, const Game& g, Player first) {
    Solver s;
    const auto t0 = Clock::now();
    const auto v = s.solve(g, first);
    const double ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    std::ostringstream os;
    os << to_string(v) << " vertices=" << g.num_vertices() << " nodes=" << s.stats().nodes_expanded
       << " ms=" << ms;
    print_kv(std::cout, "bench." + name, os.str());
  };
  run("butterfly", butterfly(), Player::Left);
  for (int k = 2; k <= 5; ++k) run("w" + std::to_string(k), w_k(k), Player::Left);
  run("sat23_unsat8", sat_to_23(all_sign_patterns()).game, Player::Left);
  run("sat32_unsat8", sat_to_32(all_sign_patterns()).game, Player::Left);
  run("qbf33_2var", qbf_to_33(QbfFormula{2, {{1, 2, 2}, {-1, -2, -2}}}).game, Player::Right);

  Rng rng(1);
  RandomGameSpec spec;
  spec.min_vertices = spec.max_vertices = 14;
  spec.min_edge_size = spec.max_edge_size = 2;
  spec.max_blue = spec.max_red = 14;
  double t22 = 0, ts = 0;
  constexpr int kGames = 200;
  for (int i = 0; i < kGames; ++i) {
    const Game g = random_game(rng, spec);
    auto t0 = Clock::now();
    const auto a = solve22(g, Player::Left);
    auto t1 = Clock::now();
    const auto b = Solver().solve(g, Player::Left);
    auto t2 = Clock::now();
    if (a != b) throw Error(ErrorKind::IllegalOutcome, "poly22 and search disagree in bench");
    t22 += std::chrono::duration<double, std::milli>(t1 - t0).count();
    ts += std::chrono::duration<double, std::milli>(t2 - t1).count();
  }
  print_kv(std::cout, "bench.poly22_14v_games", std::to_string(kGames));
  print_kv(std::cout, "bench.poly22_ms", std::to_string(t22));
  print_kv(std::cout, "bench.search_ms", std::to_string(ts));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Solver, gadget builder and verifier for achievement positional games"};
  app.require_subcommand(1);

  std::string file, file2, out, prov, algo = "auto", kind, color = "blue", outcome = "D";
  Player first = Player::Left, player = Player::Left;
  bool trace = false, check = false, orbits = false;
  int k = 2, trials = 0;
  std::uint64_t seed = 1;

  auto* solve = app.add_subcommand("solve", "value of a game for a given first player");
  solve->add_option("file", file, ".apg game")->required()->check(CLI::ExistingFile);
  solve->add_option("--first", first, "left or right")->required()->transform(CLI::CheckedTransformer(kPlayers, CLI::ignore_case));
  solve->add_option("--algo", algo, "auto, search or poly22")->check(CLI::IsMember({"auto", "search", "poly22"}));
  solve->add_flag("--trace", trace, "append a self-play trace");

  auto* oc = app.add_subcommand("outcome", "outcome class of a game");
  oc->add_option("file", file, ".apg game")->required()->check(CLI::ExistingFile);

  auto* dl = app.add_subcommand("delay", "Left- or Right-delay of a game");
  dl->add_option("file", file, ".apg game")->required()->check(CLI::ExistingFile);
  dl->add_option("--player", player, "left or right")->required()->transform(CLI::CheckedTransformer(kPlayers, CLI::ignore_case));

  auto* un = app.add_subcommand("union", "outcome of a disjoint union");
  un->add_option("file1", file, ".apg game")->required()->check(CLI::ExistingFile);
  un->add_option("file2", file2, ".apg game")->required()->check(CLI::ExistingFile);
  un->add_flag("--check-table3", check, "check the union outcome against the union table");

  auto* gd = app.add_subcommand("gadget", "write a gadget as .apg");
  gd->add_option("kind", kind, "butterfly, wk or exemplar")->required()->check(CLI::IsMember({"butterfly", "wk", "exemplar"}));
  gd->add_option("--k", k, "W_k parameter");
  gd->add_option("--color", color, "owner color: blue or red");
  gd->add_option("--outcome", outcome, "exemplar outcome: L, L-, N, D, R-, R");
  gd->add_option("-o", out, "output file")->required();

  auto* rd = app.add_subcommand("reduce", "build a reduction game from a DIMACS formula");
  rd->add_option("kind", kind, "sat23, sat32 or qbf33")->required()->check(CLI::IsMember({"sat23", "sat32", "qbf33"}));
  rd->add_option("cnf", file, "DIMACS CNF file")->required()->check(CLI::ExistingFile);
  rd->add_option("-o", out, "output .apg")->required();
  rd->add_option("--provenance", prov, "write the symbol-to-vertex map here");

  auto* em = app.add_subcommand("embed", "embed a rank-3 game into a rank-4 Maker-Maker game");
  em->add_option("kind", kind, "mm4")->required()->check(CLI::IsMember({"mm4"}));
  em->add_option("file", file, ".apg game")->required()->check(CLI::ExistingFile);
  em->add_option("-o", out, "output .apg")->required();

  auto* vf = app.add_subcommand("verify", "run a verification battery");
  vf->add_option("battery", kind, "lemmas, table3, poly22 or reductions")
      ->required()
      ->check(CLI::IsMember({"lemmas", "table3", "poly22", "reductions"}));
  vf->add_option("--seed", seed, "random seed");
  vf->add_option("--trials", trials, "random instances (battery default when omitted)")->check(CLI::PositiveNumber);
  vf->add_flag("--orbits", orbits, "poly22: also enumerate five-vertex games up to relabelling of blue edges");

  auto* bn = app.add_subcommand("bench", "time the solvers on fixed instances");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << "run 'apg --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (*solve) return cmd_solve(file, first, algo, trace);
    if (*oc) return cmd_outcome(file);
    if (*dl) return cmd_delay(file, player);
    if (*un) return cmd_union(file, file2, check);
    if (*gd) return cmd_gadget(kind, k, color, outcome, out);
    if (*rd) return cmd_reduce(kind, file, out, prov);
    if (*em) return cmd_embed(file, out);
    if (*vf) return cmd_verify(kind, seed, trials, orbits);
    if (*bn) return cmd_bench();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ResourceLimit ? kExitLimit : kExitUsage;
  }
  return kExitUsage;
}
