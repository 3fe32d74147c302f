#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "apg/apg_format.hpp"
#include "apg/cnf.hpp"
#include "apg/core_ops.hpp"
#include "apg/gadgets.hpp"
#include "apg/parallel.hpp"
#include "apg/poly22.hpp"
#include "apg/random.hpp"
#include "apg/reductions.hpp"
#include "apg/solver.hpp"
#include "apg/transversal.hpp"
#include "apg/union_table.hpp"

namespace apg {

/// Result of one verification battery. The text form carries no timings so
/// that the same seed always prints the same report.
struct Report {
  std::string name;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> fields;
  std::uint64_t failures = 0;
  bool resource_limited = false;
  std::vector<std::string> examples;

  static constexpr std::size_t kMaxExamples = 5;

  void add(const std::string& key, const std::string& value) { fields.emplace_back(key, value); }
  void add_count(const std::string& key, std::uint64_t good, std::uint64_t total) {
    add(key, std::to_string(good) + "/" + std::to_string(total));
  }
  void fail(const std::string& what) {
    ++failures;
    if (examples.size() < kMaxExamples) examples.push_back(what);
  }
  void merge(const Report& o) {
    for (const auto& f : o.fields) fields.push_back(f);
    failures += o.failures;
    resource_limited |= o.resource_limited;
    for (const auto& e : o.examples)
      if (examples.size() < kMaxExamples) examples.push_back(e);
  }
  bool ok() const { return failures == 0 && !resource_limited; }

  std::string to_text() const {
    std::ostringstream os;
    os << "verify: " << name << "\n";
    os << "seed: " << seed << "\n";
    for (const auto& [k, v] : fields) os << k << ": " << v << "\n";
    os << "failures: " << failures << "\n";
    for (std::size_t i = 0; i < examples.size(); ++i) os << "failure." << i << ": " << examples[i] << "\n";
    if (resource_limited) os << "resource_limit: hit\n";
    os << "status: " << (ok() ? "ok" : "FAILED") << "\n";
    return os.str();
  }
};

/// One-line rendering of a game for failure messages.
inline std::string one_line(const Game& g) {
  std::string s = to_apg(g);
  if (!s.empty() && s.back() == '\n') s.pop_back();
  std::replace(s.begin(), s.end(), '\n', ';');
  return s;
}

namespace detail {

// Per-task outcome of a check: pass/fail plus a message.
struct Check {
  bool counted = false;
  bool ok = true;
  bool limited = false;
  std::string msg;
};

inline void tally(Report& r, const std::string& key, const std::vector<Check>& checks) {
  std::uint64_t counted = 0, good = 0;
  for (const auto& c : checks) {
    if (!c.counted) continue;
    ++counted;
    if (c.ok) {
      ++good;
    } else {
      r.fail(key + ": " + c.msg);
    }
    r.resource_limited |= c.limited;
  }
  r.add_count(key, good, counted);
}

// Runs `body(solver, rng, check)` for every task; a ResourceLimit error is
// recorded as a failed, limited check.
template <class Body>
std::vector<Check> run_tasks(std::size_t n, std::uint64_t seed, std::uint64_t stream, Body body) {
  const Rng root = Rng(seed).split(stream);
  return parallel_map<Check>(
      n, [] { return Solver(); },
      [&](Solver& solver, std::size_t i) {
        Rng rng = root.split(i);
        Check c;
        try {
          body(solver, rng, c);
        } catch (const Error& e) {
          c.counted = true;
          c.ok = false;
          c.limited = e.kind() == ErrorKind::ResourceLimit;
          c.msg = std::string("task ") + std::to_string(i) + ": " + e.what();
        }
        return c;
      });
}

inline std::vector<VertexSet> small_edges(int n) {
  std::vector<VertexSet> out;
  for (int a = 0; a < n; ++a) out.push_back(VertexSet::singleton(a));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      VertexSet e = VertexSet::singleton(a);
      e.insert(b);
      out.push_back(e);
    }
  return out;
}

inline EdgeList edges_from_mask(const std::vector<VertexSet>& all, std::uint32_t mask) {
  EdgeList out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (mask & (1U << i)) out.push_back(all[i]);
  return out;
}

inline std::string board_line(const Board& b, int n) {
  return one_line(Game::from_indices(Game::anonymous(n, {}, {}).names(), b.blue, b.red));
}

// Random game with edges of size at most two, mostly pairs.
inline Game random_game22(Rng& rng, int max_vertices) {
  const int n = rng.uniform(1, max_vertices);
  auto edges = [&](int count) {
    EdgeList out;
    for (int i = 0; i < count; ++i) out.push_back(random_subset(rng, n, n >= 2 && rng.coin(0.9) ? 2 : 1));
    return out;
  };
  const int cap = std::max(1, n + n / 2);
  auto blue = edges(rng.uniform(0, cap));
  auto red = edges(rng.uniform(0, cap));
  return Game::anonymous(n, std::move(blue), std::move(red));
}

// Random game whose minimum edge size varies per draw, so that unit edges
// do not swamp the sample.
inline Game random_game_mixed(Rng& rng, int max_vertices) {
  static constexpr std::array<int, 4> kMinSizes{1, 2, 2, 3};
  RandomGameSpec spec;
  spec.max_vertices = max_vertices;
  spec.max_edge_size = 3;
  spec.min_edge_size = kMinSizes[static_cast<std::size_t>(rng.uniform(0, 3))];
  return random_game(rng, spec);
}

inline bool is_unit_of(const EdgeList& edges, int v) {
  return std::find(edges.begin(), edges.end(), VertexSet::singleton(v)) != edges.end();
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Outcome legality

/// Every game on up to `max_n` vertices with edges of size at most two, plus
/// random games: both results must form one of the six legal outcomes.
inline Report verify_outcome_legality(std::uint64_t seed = 1, int random_trials = 5000, int max_n = 4) {
  Report r{"outcome-legality", seed, {}, 0, false, {}};
  std::vector<std::pair<int, std::uint32_t>> tasks;
  for (int n = 0; n <= max_n; ++n) {
    const auto m = static_cast<std::uint32_t>(detail::small_edges(n).size());
    for (std::uint32_t blue = 0; blue < (1U << m); ++blue) tasks.emplace_back(n, blue);
  }
  auto counts = parallel_map<std::pair<std::uint64_t, std::string>>(
      tasks.size(), [] { return Solver(); },
      [&](Solver& solver, std::size_t i) {
        const auto [n, blue_mask] = tasks[i];
        const auto all = detail::small_edges(n);
        const auto m = static_cast<std::uint32_t>(all.size());
        std::pair<std::uint64_t, std::string> res{0, {}};
        Board b{VertexSet::prefix(n), detail::edges_from_mask(all, blue_mask), {}};
        for (std::uint32_t red = 0; red < (1U << m); ++red) {
          b.red = detail::edges_from_mask(all, red);
          const auto lf = solver.solve(b, Player::Left);
          const auto rf = solver.solve(b, Player::Right);
          if (!Outcome::kind_of(lf, rf)) {
            ++res.first;
            if (res.second.empty())
              res.second = detail::board_line(b, n) + " gives (" + to_string(lf) + ", " + to_string(rf) + ")";
          }
        }
        return res;
      });
  std::uint64_t total = 0;
  for (const auto& t : tasks) total += 1ULL << detail::small_edges(t.first).size();
  std::uint64_t bad = 0;
  for (const auto& [k, msg] : counts) {
    bad += k;
    if (k) r.fail("exhaustive: " + msg);
  }
  r.failures = bad;
  r.add_count("exhaustive", total - bad, total);

  auto checks = detail::run_tasks(static_cast<std::size_t>(random_trials), seed, 1, [&](Solver& s, Rng& rng, detail::Check& c) {
    const Game g = detail::random_game_mixed(rng, 7);
    c.counted = true;
    const auto lf = s.solve(g, Player::Left), rf = s.solve(g, Player::Right);
    if (!Outcome::kind_of(lf, rf)) {
      c.ok = false;
      c.msg = one_line(g);
    }
  });
  detail::tally(r, "random", checks);
  return r;
}

// ---------------------------------------------------------------------------
// poly22 against the search solver

namespace detail {

// Canonical blue masks on five vertices: one per orbit under relabelling.
inline std::vector<std::uint32_t> orbit_representatives(int n) {
  const auto all = small_edges(n);
  const auto m = all.size();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> maps;  // edge index -> permuted edge index
  do {
    std::vector<int> map(m);
    for (std::size_t e = 0; e < m; ++e) {
      VertexSet img;
      all[e].for_each([&](int v) { img.insert(perm[static_cast<std::size_t>(v)]); });
      map[e] = static_cast<int>(std::find(all.begin(), all.end(), img) - all.begin());
    }
    maps.push_back(std::move(map));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::uint32_t> reps;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    bool canonical = true;
    for (const auto& map : maps) {
      std::uint32_t img = 0;
      for (std::size_t e = 0; e < m; ++e)
        if (mask & (1U << e)) img |= 1U << map[e];
      if (img < mask) {
        canonical = false;
        break;
      }
    }
    if (canonical) reps.push_back(mask);
  }
  return reps;
}

inline std::string compare22(Solver& solver, const Board& b, int n) {
  for (Player first : {Player::Left, Player::Right}) {
    const auto fast = solve22(b, first);
    const auto slow = solver.solve(b, first);
    if (fast != slow)
      return board_line(b, n) + " first=" + to_string(first) + " poly22=" + to_string(fast) +
             " search=" + to_string(slow);
  }
  return {};
}

}  // namespace detail

/// solve22 against the search solver: every labelled game on up to
/// `full_n` vertices, every blue isomorphism class times every red edge set
/// on `orbit_n` vertices (0 to skip), then random games.
inline Report verify_poly22(std::uint64_t seed = 1, int trials = 10000, int full_n = 4, int orbit_n = 5,
                            int max_vertices = 14) {
  Report r{"poly22", seed, {}, 0, false, {}};
  struct Task {
    int n;
    std::uint32_t blue;
  };
  std::vector<Task> tasks;
  for (int n = 0; n <= full_n; ++n) {
    const auto m = detail::small_edges(n).size();
    for (std::uint32_t blue = 0; blue < (1U << m); ++blue) tasks.push_back({n, blue});
  }
  const std::size_t labelled_tasks = tasks.size();
  if (orbit_n > full_n)
    for (auto blue : detail::orbit_representatives(orbit_n)) tasks.push_back({orbit_n, blue});

  auto res = parallel_map<std::pair<std::uint64_t, std::string>>(
      tasks.size(), [] { return Solver(); },
      [&](Solver& solver, std::size_t i) {
        const auto all = detail::small_edges(tasks[i].n);
        std::pair<std::uint64_t, std::string> out{0, {}};
        Board b{VertexSet::prefix(tasks[i].n), detail::edges_from_mask(all, tasks[i].blue), {}};
        for (std::uint32_t red = 0; red < (1U << all.size()); ++red) {
          b.red = detail::edges_from_mask(all, red);
          auto msg = detail::compare22(solver, b, tasks[i].n);
          if (!msg.empty()) {
            ++out.first;
            if (out.second.empty()) out.second = msg;
          }
        }
        return out;
      });
  std::uint64_t total_l = 0, bad_l = 0, total_o = 0, bad_o = 0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const std::uint64_t games = 1ULL << detail::small_edges(tasks[i].n).size();
    auto& total = i < labelled_tasks ? total_l : total_o;
    auto& bad = i < labelled_tasks ? bad_l : bad_o;
    total += games;
    bad += res[i].first;
    if (res[i].first) r.fail("exhaustive: " + res[i].second);
  }
  r.failures = bad_l + bad_o;
  r.add_count("exhaustive_labelled", total_l - bad_l, total_l);
  if (orbit_n > full_n) r.add_count("exhaustive_orbits", total_o - bad_o, total_o);

  auto checks = detail::run_tasks(static_cast<std::size_t>(trials), seed, 2, [&](Solver& s, Rng& rng, detail::Check& c) {
    const Game g = detail::random_game22(rng, max_vertices);
    c.counted = true;
    c.msg = detail::compare22(s, g.board(), g.num_vertices());
    c.ok = c.msg.empty();
  });
  detail::tally(r, "agreement", checks);
  return r;
}

// ---------------------------------------------------------------------------
// Lemma battery

namespace detail {

inline constexpr int kMaxAttempts = 2000;

template <class Gen, class Want>
Game sample_until(Gen gen, Want want) {
  for (int i = 0; i < kMaxAttempts; ++i) {
    Game g = gen();
    if (want(g)) return g;
  }
  throw Error(ErrorKind::ResourceLimit, "no eligible instance after " + std::to_string(kMaxAttempts) + " draws");
}

inline std::string outcome_pair(Outcome a, Outcome b) { return std::string(a.name()) + " vs " + b.name(); }

inline void lemma_more_moves(Solver& s, Rng& rng, Check& c) {
  const Game g = sample_until([&] { return random_game_mixed(rng, 6); }, [](const Game& h) {
    for (int u = 0; u < h.num_vertices(); ++u)
      if (!is_unit_of(h.blue_edges(), u)) return true;
    return false;
  });
  c.counted = true;
  for (int u = 0; u < g.num_vertices() && c.ok; ++u) {
    if (is_unit_of(g.blue_edges(), u)) continue;
    const Game gu = update(g, VertexSet::singleton(u), {});
    for (Player first : {Player::Left, Player::Right}) {
      const auto before = s.solve(g, first), after = s.solve(gu, first);
      if ((before == GameResult::LeftWin && after != GameResult::LeftWin) ||
          (before != GameResult::RightWin && after == GameResult::RightWin)) {
        c.ok = false;
        c.msg = one_line(g) + " u=" + g.name(u) + " first=" + to_string(first);
      }
    }
  }
}

inline void lemma_stealing(Solver& s, Rng& rng, Check& c) {
  const int n = rng.uniform(1, 6);
  const auto edges = random_edges(rng, n, rng.uniform(0, 6), 1, 3);
  const Game g = Game::anonymous(n, edges, edges);
  c.counted = true;
  if (s.solve(g, Player::Left) == GameResult::RightWin) {
    c.ok = false;
    c.msg = one_line(g);
  }
}

inline void lemma_monotonicity(Solver& s, Rng& rng, Check& c) {
  const Game g = random_game_mixed(rng, 6);
  const int n = g.num_vertices();
  const Outcome base = s.outcome(g);
  c.counted = true;
  auto expect_up = [&](const Game& h, const char* what) {
    const Outcome o = s.outcome(h);
    if (c.ok && !leq_L(base, o)) {
      c.ok = false;
      c.msg = std::string(what) + " " + one_line(g) + " -> " + one_line(h) + " " + outcome_pair(base, o);
    }
  };
  EdgeList blue = g.blue_edges();
  blue.push_back(random_subset(rng, n, rng.uniform(1, std::min(3, n))));
  expect_up(Game::from_indices(g.names(), blue, g.red_edges()), "add-blue");
  if (!g.red_edges().empty()) {
    EdgeList red = g.red_edges();
    red.erase(red.begin() + rng.uniform(0, static_cast<int>(red.size()) - 1));
    expect_up(Game::from_indices(g.names(), g.blue_edges(), red), "remove-red");
  }
  std::vector<std::size_t> shrinkable;
  for (std::size_t i = 0; i < g.blue_edges().size(); ++i)
    if (g.blue_edges()[i].size() >= 2) shrinkable.push_back(i);
  if (!shrinkable.empty()) {
    EdgeList b2 = g.blue_edges();
    auto& e = b2[shrinkable[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(shrinkable.size()) - 1))]];
    std::vector<int> members;
    e.for_each([&](int v) { members.push_back(v); });
    e.erase(members[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(members.size()) - 1))]);
    expect_up(Game::from_indices(g.names(), b2, g.red_edges()), "shrink-blue");
  }
}

inline void lemma_pairing(Solver& s, Rng& rng, Check& c) {
  const int n = rng.uniform(2, 7);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::shuffle(order.begin(), order.end(), rng.engine());
  std::vector<std::pair<int, int>> pairs;
  const int np = rng.uniform(1, n / 2);
  for (int i = 0; i < np; ++i) pairs.emplace_back(order[2 * i], order[2 * i + 1]);
  EdgeList blue;
  for (int k = rng.uniform(1, 5); k > 0; --k) {
    const auto [a, b] = pairs[static_cast<std::size_t>(rng.uniform(0, np - 1))];
    VertexSet e = VertexSet::singleton(a);
    e.insert(b);
    e |= random_subset(rng, n, rng.uniform(0, std::min(2, n)));
    blue.push_back(e);
  }
  const Game g = Game::anonymous(n, blue, random_edges(rng, n, rng.uniform(0, 5), 1, 3));
  const Pairing pairing(pairs);
  c.counted = true;
  if (!check_pairing(g, pairing, Player::Right)) {
    c.ok = false;
    c.msg = "generated pairing rejected: " + one_line(g);
    return;
  }
  const Outcome o = s.outcome(g);
  if (o.when_left_starts() == GameResult::LeftWin || o.when_right_starts() == GameResult::LeftWin) {
    c.ok = false;
    c.msg = one_line(g) + " outcome " + o.name();
  }
}

inline std::vector<std::pair<int, int>> dominating_pairs(const Game& g) {
  const int n = g.num_vertices();
  const Membership m(g.blue_edges(), g.red_edges(), n);
  const VertexSet units = unit_edge_vertices(g);
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && !units.contains(u) && !units.contains(v) && m.implies(u, v)) out.emplace_back(u, v);
  return out;
}

inline void lemma_dominating(Solver& s, Rng& rng, Check& c) {
  const Game g =
      sample_until([&] { return random_game_mixed(rng, 6); }, [](const Game& h) { return !dominating_pairs(h).empty(); });
  c.counted = true;
  const Outcome o = s.outcome(g);
  for (auto [u, v] : dominating_pairs(g)) {
    const auto U = VertexSet::singleton(u), V = VertexSet::singleton(v);
    const Outcome gu = s.outcome(update(g, U, {})), gv = s.outcome(update(g, V, {}));
    const Outcome gu_r = s.outcome(update(g, {}, U)), gv_r = s.outcome(update(g, {}, V));
    const Outcome uv = s.outcome(update(g, U, V)), vu = s.outcome(update(g, V, U));
    const char* bad = !leq_L(gu, gv)     ? "G_u <= G_v"
                      : !leq_L(gv_r, gu_r) ? "G^v <= G^u"
                      : !leq_L(uv, o)      ? "G_u^v <= G"
                      : !leq_L(o, vu)      ? "G <= G_v^u"
                                           : nullptr;
    if (bad) {
      c.ok = false;
      c.msg = std::string(bad) + " fails: " + one_line(g) + " u=" + g.name(u) + " v=" + g.name(v);
      return;
    }
  }
}

inline void lemma_twins(Solver& s, Rng& rng, Check& c) {
  const Game g = sample_until([&] { return random_game_mixed(rng, 7); },
                              [](const Game& h) { return !twin_reduce(h).removed.empty(); });
  c.counted = true;
  const auto red = twin_reduce(g);
  Game cur = g;
  const Outcome o = s.outcome(g);
  for (const auto& [a, b] : red.removed) {
    cur = update(cur, std::vector<std::string>{a}, std::vector<std::string>{b});
    const Outcome step = s.outcome(cur);
    if (step != o) {
      c.ok = false;
      c.msg = one_line(g) + " removing " + a + "," + b + " gives " + outcome_pair(o, step);
      return;
    }
  }
}

inline void lemma_greedy(Solver& s, Rng& rng, Check& c) {
  RandomGameSpec spec;
  spec.min_edge_size = 2;
  const Game g = sample_until([&] { return random_game(rng, spec); }, [](const Game& h) {
    return !greedy_moves(h, Player::Left).empty() || !greedy_moves(h, Player::Right).empty();
  });
  c.counted = true;
  const Board b = g.board();
  for (Player p : {Player::Left, Player::Right}) {
    for (const auto& gm : greedy_moves(g, p)) {
      const Board child = after_pick(b, gm.pick, p);
      const auto root = s.solve(b, p);
      const auto via = s.solve(child, opponent(p));
      if (root != via || !unit_vertices(child.edges_of(p)).contains(gm.answer)) {
        c.ok = false;
        c.msg = one_line(g) + " " + to_string(p) + " greedy " + g.name(gm.pick) + " gives " + to_string(via) +
                ", optimum " + to_string(root);
        return;
      }
    }
  }
}

}  // namespace detail

/// Lemma battery: `trials` seeded instances per lemma.
inline Report verify_lemmas(std::uint64_t seed = 1, int trials = 1000) {
  Report r{"lemmas", seed, {}, 0, false, {}};
  r.add("trials", std::to_string(trials));
  using Body = void (*)(Solver&, Rng&, detail::Check&);
  const std::array<std::pair<const char*, Body>, 7> lemmas{{
      {"more_moves", detail::lemma_more_moves},
      {"strategy_stealing", detail::lemma_stealing},
      {"edge_monotonicity", detail::lemma_monotonicity},
      {"pairing", detail::lemma_pairing},
      {"dominating_option", detail::lemma_dominating},
      {"twin_simplification", detail::lemma_twins},
      {"greedy_move", detail::lemma_greedy},
  }};
  std::uint64_t stream = 10;
  for (const auto& [key, body] : lemmas)
    detail::tally(r, key, detail::run_tasks(static_cast<std::size_t>(trials), seed, stream++, body));
  return r;
}

// ---------------------------------------------------------------------------
// Disjoint unions and delays

/// Union law: the outcome of G ∪ G' lies in the table cell, and a D
/// component never changes the other's outcome. Every fourth pair draws G
/// with outcome D.
inline Report verify_union(std::uint64_t seed = 1, int trials = 2000) {
  Report r{"table3", seed, {}, 0, false, {}};
  auto cells = detail::run_tasks(static_cast<std::size_t>(trials), seed, 3, [&](Solver& s, Rng& rng, detail::Check& c) {
    auto gen = [&] { return detail::random_game_mixed(rng, 7); };
    Game g = gen();
    if (rng.uniform(0, 3) == 0) g = detail::sample_until(gen, [&](const Game& h) { return s.outcome(h) == Outcome::Kind::D; });
    const Game h = gen();
    const Outcome o = s.outcome(g), o2 = s.outcome(h);
    const Outcome u = s.outcome(disjoint_union(g, h).game);
    c.counted = true;
    if (!verify_union_cell(o, o2, u)) {
      c.ok = false;
      c.msg = one_line(g) + " + " + one_line(h) + ": " + o.name() + " + " + o2.name() + " = " + u.name();
    } else if ((o == Outcome::Kind::D && u != o2) || (o2 == Outcome::Kind::D && u != o)) {
      c.ok = false;
      c.msg = "D component changed the outcome: " + one_line(g) + " + " + one_line(h);
    }
    // D pairs are tagged in the message slot for the second count.
    if (c.ok && (o == Outcome::Kind::D || o2 == Outcome::Kind::D)) c.msg = "D";
  });
  detail::tally(r, "union_cells", cells);
  std::uint64_t d_pairs = 0;
  for (const auto& c : cells)
    if (c.ok && c.msg == "D") ++d_pairs;
  r.add_count("d_identity", d_pairs, d_pairs);
  return r;
}

/// W_k delays, then the delay comparison on pairs of first-player wins.
inline Report verify_delay(std::uint64_t seed = 1, int pairs = 500, int max_k = 5) {
  Report r{"delay", seed, {}, 0, false, {}};
  Solver solver;
  std::uint64_t wk_good = 0;
  for (int k = 1; k <= max_k; ++k) {
    const Delay d = solver.delay(w_k(k, Player::Left), Player::Left);
    if (d == Delay::finite(k - 1)) {
      ++wk_good;
    } else {
      r.fail("W_" + std::to_string(k) + " delay " + d.to_string() + ", expected " + std::to_string(k - 1));
    }
  }
  r.add_count("wk_delay", wk_good, static_cast<std::uint64_t>(max_k));

  auto checks = detail::run_tasks(static_cast<std::size_t>(pairs), seed, 4, [&](Solver& s, Rng& rng, detail::Check& c) {
    std::string fin_err;
    auto draw_winner = [&](Player p) {
      for (int i = 0; i < detail::kMaxAttempts; ++i) {
        Game g = detail::random_game_mixed(rng, 6);
        const bool wins = s.solve(g, p) == win_for(p);
        const bool finite = !s.delay(g, p).is_infinite();
        if (wins != finite && fin_err.empty())
          fin_err = "delay finiteness disagrees with the first-player result: " + one_line(g);
        if (wins) return g;
      }
      throw Error(ErrorKind::ResourceLimit, "no first-player win drawn");
    };
    const Game g = draw_winner(Player::Left);
    const Game h = draw_winner(Player::Right);
    const Delay d = s.delay(g, Player::Left), d2 = s.delay(h, Player::Right);
    const Game u = disjoint_union(g, h).game;
    c.counted = true;
    if (!fin_err.empty()) {
      c.ok = false;
      c.msg = fin_err;
      return;
    }
    if (d <= d2 && s.solve(u, Player::Left) != GameResult::LeftWin) {
      c.ok = false;
      c.msg = "d=" + d.to_string() + " <= d'=" + d2.to_string() + " but Left does not win first: " + one_line(g) +
              " + " + one_line(h);
    } else if (d2 <= d && s.solve(u, Player::Right) != GameResult::RightWin) {
      c.ok = false;
      c.msg = "d'=" + d2.to_string() + " <= d=" + d.to_string() + " but Right does not win first: " + one_line(g) +
              " + " + one_line(h);
    }
  });
  detail::tally(r, "delay_pairs", checks);
  return r;
}

// ---------------------------------------------------------------------------
// Reductions

/// All clauses of three literals over variables 1..n, as sorted multisets.
inline std::vector<std::vector<int>> all_clauses(int n) {
  std::vector<int> lits;
  for (int v = 1; v <= n; ++v) {
    lits.push_back(v);
    lits.push_back(-v);
  }
  std::vector<std::vector<int>> out;
  const auto L = lits.size();
  for (std::size_t a = 0; a < L; ++a)
    for (std::size_t b = a; b < L; ++b)
      for (std::size_t c = b; c < L; ++c) out.push_back({lits[a], lits[b], lits[c]});
  return out;
}

/// Every formula with one or two clauses (unordered, repetition allowed).
inline std::vector<CnfFormula> small_formulas(int n) {
  const auto clauses = all_clauses(n);
  std::vector<CnfFormula> out;
  for (const auto& c : clauses) out.push_back({n, {c}});
  for (std::size_t i = 0; i < clauses.size(); ++i)
    for (std::size_t j = i; j < clauses.size(); ++j) out.push_back({n, {clauses[i], clauses[j]}});
  return out;
}

/// The eight clauses over x1, x2, x3 with every sign pattern.
inline CnfFormula all_sign_patterns() {
  CnfFormula f{3, {}};
  for (int mask = 0; mask < 8; ++mask)
    f.clauses.push_back({mask & 1 ? -1 : 1, mask & 2 ? -2 : 2, mask & 4 ? -3 : 3});
  return f;
}

inline std::string formula_line(const std::vector<std::vector<int>>& clauses) {
  std::string s;
  for (const auto& c : clauses) {
    s += "(";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
    s += ")";
  }
  return s;
}

/// SAT reductions on every 1- and 2-clause formula over three variables.
/// The second-level reduction also runs the full solver.
inline Report verify_sat_reductions(bool with_sat32 = true) {
  Report r{"sat-reductions", 0, {}, 0, false, {}};
  const auto formulas = small_formulas(3);
  struct Res {
    detail::Check canonical, full23, no_left_win, full32;
  };
  auto res = parallel_map<Res>(
      formulas.size(), [] { return Solver(); },
      [&](Solver& s, std::size_t i) {
        Res out;
        const auto& phi = formulas[i];
        const bool sat = sat_brute(phi);
        const std::string tag = formula_line(phi.clauses) + (sat ? " sat" : " unsat");
        auto run = [&](detail::Check& c, auto&& body) {
          c.counted = true;
          try {
            body();
          } catch (const Error& e) {
            c.ok = false;
            c.limited = e.kind() == ErrorKind::ResourceLimit;
            c.msg = tag + ": " + e.what();
          }
        };
        const Game g23 = sat_to_23(phi).game;
        run(out.canonical, [&] {
          const bool non_losing = solve_vs_canonical_right(g23) == CanonicalResult::LeftNonLosing;
          if (non_losing != sat) out.canonical = {true, false, false, tag + ": canonical exploration disagrees"};
        });
        GameResult v23 = GameResult::Draw;
        run(out.full23, [&] {
          v23 = s.solve(g23, Player::Left);
          if ((v23 != GameResult::RightWin) != sat)
            out.full23 = {true, false, false, tag + ": solver gives " + to_string(v23)};
        });
        run(out.no_left_win, [&] {
          if (out.full23.ok && v23 == GameResult::LeftWin)
            out.no_left_win = {true, false, false, tag + ": Left wins outright"};
        });
        if (with_sat32) {
          run(out.full32, [&] {
            const auto v = s.solve(sat_to_32(phi).game, Player::Left);
            if ((v == GameResult::LeftWin) != sat) out.full32 = {true, false, false, tag + ": solver gives " + to_string(v)};
          });
        }
        return out;
      });
  std::vector<detail::Check> a, b, c, d;
  for (const auto& x : res) {
    a.push_back(x.canonical);
    b.push_back(x.full23);
    c.push_back(x.no_left_win);
    d.push_back(x.full32);
  }
  r.add("formulas", std::to_string(formulas.size()));
  detail::tally(r, "sat23_canonical", a);
  detail::tally(r, "sat23_solver", b);
  detail::tally(r, "sat23_never_left_win", c);
  if (with_sat32) detail::tally(r, "sat32_solver", d);

  // Eight clauses, unsatisfiable: canonical exploration and both full solves.
  const auto unsat = all_sign_patterns();
  auto single = [&](const std::string& key, auto&& body) {
    std::vector<detail::Check> e(1);
    e[0].counted = true;
    try {
      if (!body()) e[0] = {true, false, false, "8-clause formula: Left survives"};
    } catch (const Error& err) {
      e[0] = {true, false, err.kind() == ErrorKind::ResourceLimit, std::string("8-clause formula: ") + err.what()};
    }
    detail::tally(r, key, e);
  };
  single("sat23_unsat8_canonical", [&] {
    return !sat_brute(unsat) && solve_vs_canonical_right(sat_to_23(unsat).game) == CanonicalResult::RightWins;
  });
  single("sat23_unsat8_solver", [&] { return Solver().solve(sat_to_23(unsat).game, Player::Left) == GameResult::RightWin; });
  if (with_sat32)
    single("sat32_unsat8_solver", [&] { return Solver().solve(sat_to_32(unsat).game, Player::Left) != GameResult::LeftWin; });
  return r;
}

/// Every two-variable QBF with one or two clauses through qbf_to_33, plus
/// the forced opening for every choice sequence.
inline Report verify_qbf_reduction() {
  Report r{"qbf-reduction", 0, {}, 0, false, {}};
  const auto formulas = small_formulas(2);
  struct Res {
    detail::Check equiv, script;
    int mechanical = -1;  // tautological formulas only: 1 if the literal build agrees
  };
  auto res = parallel_map<Res>(
      formulas.size(), [] { return Solver(); },
      [&](Solver& s, std::size_t i) {
        Res out;
        const auto psi = QbfFormula::from_cnf(formulas[i]);
        const auto winner = qbf_brute(psi);
        const std::string tag = formula_line(psi.clauses) + " " + to_string(winner);
        const auto red = qbf_to_33(psi);
        out.equiv.counted = out.script.counted = true;
        if (max_edge_size(red.game.blue_edges()) > 3 || max_edge_size(red.game.red_edges()) > 3)
          out.equiv = {true, false, false, tag + ": edge larger than 3"};
        try {
          const auto v = s.solve(red.game, Player::Right);
          if ((v == GameResult::LeftWin) != (winner == QbfWinner::Falsifier))
            out.equiv = {true, false, false, tag + ": Right-first value " + to_string(v)};
        } catch (const Error& e) {
          out.equiv = {true, false, e.kind() == ErrorKind::ResourceLimit, tag + ": " + e.what()};
        }
        if (!red.notes.empty()) {
          try {
            const auto v = s.solve(qbf_to_33(psi, true).game, Player::Right);
            out.mechanical = (v == GameResult::LeftWin) == (winner == QbfWinner::Falsifier);
          } catch (const Error&) {
            out.mechanical = 0;
          }
        }
        for (int mask = 0; mask < 4; ++mask) {
          try {
            if (!forced_script_check(red, {(mask & 1) != 0, (mask & 2) != 0}))
              out.script = {true, false, false, tag + ": script rejected"};
          } catch (const Error& e) {
            out.script = {true, false, false, tag + " choices " + std::to_string(mask) + ": " + e.what()};
          }
        }
        return out;
      });
  std::vector<detail::Check> a, b;
  std::uint64_t taut = 0, taut_agree = 0;
  for (const auto& x : res) {
    a.push_back(x.equiv);
    b.push_back(x.script);
    if (x.mechanical >= 0) {
      ++taut;
      taut_agree += static_cast<std::uint64_t>(x.mechanical);
    }
  }
  r.add("formulas", std::to_string(formulas.size()));
  detail::tally(r, "qbf33_solver", a);
  detail::tally(r, "forced_script", b);
  // Not a pass criterion: how the literal build fares with tautologies kept.
  r.add_count("info_tautologies_kept_agreement", taut_agree, taut);
  return r;
}

/// Rank-3 games embedded into rank-4 Maker-Maker: after Left takes u_L and
/// Right takes u_R, the value with Left to move is the original one.
inline Report verify_rank4_embedding(std::uint64_t seed = 1, int trials = 200) {
  Report r{"rank4-embedding", seed, {}, 0, false, {}};
  auto checks = detail::run_tasks(static_cast<std::size_t>(trials), seed, 5, [&](Solver& s, Rng& rng, detail::Check& c) {
    const Game g = detail::random_game_mixed(rng, 6);
    const auto emb = mm_rank4_embed(g);
    const Game mm = maker_maker_game(emb.h);
    const Game after = update(mm, VertexSet::singleton(emb.u_left), VertexSet::singleton(emb.u_right));
    c.counted = true;
    const auto a = s.solve(after, Player::Left), b = s.solve(g, Player::Left);
    if (max_edge_size(emb.h.edges) > 4 || a != b) {
      c.ok = false;
      c.msg = one_line(g) + " embedded " + to_string(a) + " original " + to_string(b);
    }
  });
  detail::tally(r, "round_trip", checks);
  return r;
}

/// Every hypergraph on up to four vertices: the Maker-Breaker embeddings
/// with no red edges and with transversal red edges agree, and the
/// transversal map is an involution on antichains.
inline Report verify_transversal_embedding(int max_n = 4) {
  Report r{"transversal-embedding", 0, {}, 0, false, {}};
  std::vector<std::pair<int, std::uint32_t>> tasks;
  for (int n = 0; n <= max_n; ++n)
    for (std::uint32_t fam = 0; fam < (1U << ((1U << n) - 1)); ++fam) tasks.emplace_back(n, fam);
  struct Res {
    detail::Check values, involution;
  };
  auto res = parallel_map<Res>(
      tasks.size(), [] { return Solver(); },
      [&](Solver& s, std::size_t i) {
        const auto [n, fam] = tasks[i];
        EdgeList edges;
        for (std::uint32_t sub = 1; sub < (1U << n); ++sub) {
          if (!(fam & (1U << (sub - 1)))) continue;
          VertexSet e;
          for (int v = 0; v < n; ++v)
            if (sub & (1U << v)) e.insert(v);
          edges.push_back(e);
        }
        const Hypergraph h = Hypergraph::anonymous(n, edges);
        Res out;
        out.values.counted = out.involution.counted = true;
        const std::string tag = "n=" + std::to_string(n) + " family=" + std::to_string(fam);
        const Game empty = embed_maker_breaker(h, EmbedMode::EmptyRed);
        if (edges.empty()) {
          try {
            embed_maker_breaker(h, EmbedMode::TransversalRed);
            out.values = {true, false, false, tag + ": edgeless hypergraph accepted"};
          } catch (const Error& e) {
            if (e.kind() != ErrorKind::EdgelessHypergraph) out.values = {true, false, false, tag + ": " + e.what()};
          }
        } else {
          const Game trans = embed_maker_breaker(h, EmbedMode::TransversalRed);
          for (Player first : {Player::Left, Player::Right}) {
            const auto a = s.solve(empty, first), b = s.solve(trans, first);
            const bool ok = a != GameResult::RightWin && (a == GameResult::LeftWin) == (b == GameResult::LeftWin) &&
                            (a == GameResult::Draw) == (b == GameResult::RightWin);
            if (!ok)
              out.values = {true, false, false,
                            tag + " first=" + to_string(first) + ": " + to_string(a) + " vs " + to_string(b)};
          }
        }
        const auto tr = minimal_transversals(h);
        const auto back = minimal_transversals(Hypergraph{h.names, tr});
        if (back != antichain(edges)) out.involution = {true, false, false, tag + ": Tr(Tr(H)) differs"};
        return out;
      });
  std::vector<detail::Check> a, b;
  for (const auto& x : res) {
    a.push_back(x.values);
    b.push_back(x.involution);
  }
  detail::tally(r, "embedding_values", a);
  detail::tally(r, "involution", b);
  return r;
}

}  // namespace apg
