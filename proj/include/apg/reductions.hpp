#pragma once

#include <cstdlib>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "apg/cnf.hpp"
#include "apg/gadgets.hpp"
#include "apg/transversal.hpp"

namespace apg {

struct ReductionOutput {
  Game game;
  /// (formula symbol, vertex name); every vertex appears exactly once.
  std::vector<std::pair<std::string, std::string>> provenance;
  /// Remarks about the input, e.g. clauses left out of the build.
  std::vector<std::string> notes;

  std::string provenance_text() const {
    std::string out;
    for (const auto& n : notes) out += "# " + n + "\n";
    for (const auto& [sym, v] : provenance) out += sym + " -> " + v + "\n";
    return out;
  }
};

/// Incremental game construction by vertex name.
class GameBuilder {
 public:
  int vertex(const std::string& name, const std::string& symbol) {
    auto [it, inserted] = index_.emplace(name, static_cast<int>(names_.size()));
    if (inserted) {
      names_.push_back(name);
      provenance_.emplace_back(symbol, name);
    }
    return it->second;
  }

  int at(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error(ErrorKind::UnknownVertex, name);
    return it->second;
  }

  void blue(std::initializer_list<std::string> e) { blue_.push_back(set_of(e)); }
  void red(std::initializer_list<std::string> e) { red_.push_back(set_of(e)); }
  void blue(const VertexSet& e) { blue_.push_back(e); }
  void red(const VertexSet& e) { red_.push_back(e); }

  VertexSet set_of(std::initializer_list<std::string> e) const {
    VertexSet s;
    for (const auto& n : e) s.insert(at(n));
    return s;
  }

  ReductionOutput finish() const { return {Game::from_indices(names_, blue_, red_), provenance_, {}}; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::pair<std::string, std::string>> provenance_;
  EdgeList blue_, red_;
};

namespace detail {
inline std::string lit_symbol(int lit) { return (lit > 0 ? "x" : "~x") + std::to_string(std::abs(lit)); }
inline std::string lit_vertex(int lit) { return (lit > 0 ? "x" : "nx") + std::to_string(std::abs(lit)); }

inline void add_sat_gadget(GameBuilder& b, const CnfFormula& phi) {
  validate(phi);
  for (int x = 1; x <= phi.num_vars; ++x) {
    b.vertex(lit_vertex(x), "literal " + lit_symbol(x));
    b.vertex(lit_vertex(-x), "literal " + lit_symbol(-x));
    b.blue({lit_vertex(x), lit_vertex(-x)});
  }
  for (std::size_t c = 0; c < phi.clauses.size(); ++c) {
    const auto& clause = phi.clauses[c];
    std::vector<std::string> cs;
    for (std::size_t k = 0; k < 3; ++k) {
      const std::string base = "c" + std::to_string(c) + "_l" + std::to_string(k);
      const std::string sym = "clause " + std::to_string(c) + " slot " + std::to_string(k) + " (" +
                              lit_symbol(clause[k]) + ")";
      b.vertex(base, sym);
      b.vertex(base + "p", sym + " prime");
      b.blue({lit_vertex(clause[k]), base, base + "p"});
      cs.push_back(base);
    }
    b.red({cs[0], cs[1]});
    b.red({cs[1], cs[2]});
    b.red({cs[2], cs[0]});
  }
  b.vertex("omega", "omega");
  b.vertex("omega_check", "omega check");
  b.vertex("omega_hat", "omega hat");
  b.red({"omega", "omega_check"});
  b.red({"omega", "omega_hat"});
}

inline void add_butterfly(GameBuilder& b, const std::string& prefix) {
  const Game bf = butterfly(Player::Left);
  for (const auto& n : bf.names()) b.vertex(prefix + n, "butterfly " + prefix.substr(0, prefix.size() - 1) + " " + n);
  for (const auto& e : bf.blue_edges()) {
    VertexSet s;
    e.for_each([&](int v) { s.insert(b.at(prefix + bf.name(v))); });
    b.blue(s);
  }
}
}  // namespace detail

/// 3-SAT to a blue-3 / red-2 game: Left, moving first, has a non-losing
/// strategy iff the formula is satisfiable.
inline ReductionOutput sat_to_23(const CnfFormula& phi) {
  GameBuilder b;
  detail::add_sat_gadget(b, phi);
  return b.finish();
}

/// sat_to_23 plus two blue butterflies: Left, moving first, wins iff the
/// formula is satisfiable.
inline ReductionOutput sat_to_32(const CnfFormula& phi) {
  GameBuilder b;
  detail::add_sat_gadget(b, phi);
  detail::add_butterfly(b, "bf1.");
  detail::add_butterfly(b, "bf2.");
  return b.finish();
}

namespace qbf_names {
inline std::string t(int i, char side) { return "t" + std::to_string(i) + side; }
inline std::string f(int i, char side) { return "f" + std::to_string(i) + side; }
inline std::string u(int i) { return "u" + std::to_string(i); }
inline std::string v(int i) { return "v" + std::to_string(i); }
}  // namespace qbf_names

inline bool is_tautology(const std::vector<int>& clause) {
  for (int a : clause)
    for (int b : clause)
      if (a == -b) return true;
  return false;
}

/// 3-QBF to a game with all edges of size at most 3: Left, moving second,
/// wins iff Falsifier wins the formula. A clause holding x and ~x is always
/// true and is left out unless `keep_tautologies` is set; built as an edge
/// {t_iR, f_iR} it hands Left a tempo inside an even variable's gadget.
inline ReductionOutput qbf_to_33(const QbfFormula& psi, bool keep_tautologies = false) {
  validate(psi);
  using namespace qbf_names;
  GameBuilder b;
  const int m = psi.num_vars;
  for (int i = 1; i <= m; ++i) {
    const std::string x = "x" + std::to_string(i);
    b.vertex(t(i, 'R'), x + " t_R");
    b.vertex(f(i, 'R'), x + " f_R");
    b.vertex(t(i, 'L'), x + " t_L");
    b.vertex(f(i, 'L'), x + " f_L");
    b.vertex(u(i), x + " u");
    b.vertex(v(i), x + " v");
    for (const char* s : {"a", "b", "bp", "c", "cp"}) b.vertex(s + std::to_string(i), x + " " + s);
  }
  b.vertex("w", "w");

  for (int i = 1; i <= m; ++i) {
    // e* with the previous variable's t/f vertex of the given side.
    auto star = [&](bool red, std::initializer_list<std::string> e) {
      const VertexSet base = b.set_of(e);
      if (i == 1) {
        red ? b.red(base) : b.blue(base);
        return;
      }
      const char side = red ? 'R' : 'L';
      for (const auto& prev : {t(i - 1, side), f(i - 1, side)}) {
        VertexSet s = base;
        s.insert(b.at(prev));
        red ? b.red(s) : b.blue(s);
      }
    };
    const auto tR = t(i, 'R'), fR = f(i, 'R'), tL = t(i, 'L'), fL = f(i, 'L'), ui = u(i), vi = v(i);
    if (i % 2 == 1) {
      star(true, {tR, fL});
      star(true, {fR, tL});
      b.red({fR, fL, ui});
      b.red({tR, tL, vi});
      star(false, {tR, fR});
      star(false, {tR, ui});
      star(false, {fR, vi});
      star(false, {tL, ui});
      star(false, {fL, vi});
    } else {
      star(false, {tR, fL});
      star(false, {fR, tL});
      b.blue({tL, fL, ui});
      b.blue({tL, fL, vi});
      star(true, {tL, fL});
      star(true, {tL, ui});
      star(true, {fL, vi});
      star(true, {tR, ui});
      star(true, {fR, vi});
      b.red({tR, tL, vi});
      b.red({fR, fL, ui});
    }
    const std::string is = std::to_string(i);
    b.blue({tR, "a" + is, "b" + is});
    b.blue({tR, "a" + is, "c" + is});
    b.blue({fR, "a" + is, "bp" + is});
    b.blue({fR, "a" + is, "cp" + is});
  }
  b.blue({u(m), v(m), "w"});

  std::vector<std::string> notes;
  for (std::size_t j = 0; j < psi.clauses.size(); ++j) {
    const auto& clause = psi.clauses[j];
    if (!keep_tautologies && is_tautology(clause)) {
      notes.push_back("clause " + std::to_string(j) + " is a tautology; no edge built");
      continue;
    }
    VertexSet e;
    for (int lit : clause) {
      const int i = std::abs(lit);
      const bool positive = lit > 0;
      const bool take_t = (i % 2 == 1) == positive;
      e.insert(b.at(take_t ? t(i, 'R') : f(i, 'R')));
    }
    b.blue(e);
  }
  auto out = b.finish();
  out.notes = std::move(notes);
  return out;
}

/// Plays the forced opening of a qbf_to_33 game: per variable the chooser's
/// pick (t when choices[i-1] is true) and four forced answers, then Right's
/// forced pick of w. Before each chooser move neither side may hold a unit
/// edge; before each forced move the mover must face exactly one unit
/// threat, at the scripted vertex, and hold none of their own. Throws
/// ScriptViolation naming the failing step (1-based).
inline bool forced_script_check(const ReductionOutput& out, const std::vector<bool>& choices) {
  using namespace qbf_names;
  const Game& g = out.game;
  const int m = static_cast<int>(choices.size());
  std::vector<std::pair<std::string, bool>> script;  // (vertex, forced?)
  for (int i = 1; i <= m; ++i) {
    const bool t_choice = choices[static_cast<std::size_t>(i - 1)];
    if (i % 2 == 1) {
      if (t_choice) script.insert(script.end(), {{t(i, 'R'), false}, {f(i, 'L'), true}, {v(i), true}, {t(i, 'L'), true}, {u(i), true}});
      else script.insert(script.end(), {{f(i, 'R'), false}, {t(i, 'L'), true}, {u(i), true}, {f(i, 'L'), true}, {v(i), true}});
    } else {
      if (t_choice) script.insert(script.end(), {{t(i, 'L'), false}, {f(i, 'R'), true}, {v(i), true}, {f(i, 'L'), true}, {u(i), true}});
      else script.insert(script.end(), {{f(i, 'L'), false}, {t(i, 'R'), true}, {u(i), true}, {t(i, 'L'), true}, {v(i), true}});
    }
  }
  script.emplace_back("w", true);

  auto violation = [](std::size_t step, const std::string& why) {
    throw Error(ErrorKind::ScriptViolation, "step " + std::to_string(step + 1) + ": " + why);
  };
  Position pos = Position::start(g, Player::Right);
  for (std::size_t s = 0; s < script.size(); ++s) {
    const auto& [name, forced] = script[s];
    if (pos.status().kind != Status::Kind::Ongoing) violation(s, "game already over");
    const auto idx = g.index_of(name);
    if (!idx) violation(s, "unknown vertex " + name);
    const Board& b = pos.board();
    const Player mover = pos.to_move();
    if (!unit_vertices(b.edges_of(mover)).empty()) violation(s, std::string(to_string(mover)) + " could win at once");
    const VertexSet threats = unit_vertices(b.edges_of(opponent(mover)));
    if (forced) {
      if (threats.size() != 1 || threats.front() != *idx)
        violation(s, std::string(to_string(mover)) + " is not forced to pick " + name);
    } else if (!threats.empty()) {
      violation(s, std::string(to_string(mover)) + " faces a threat before choosing " + name);
    }
    pos = pos.play(*idx);
  }
  if (pos.status().kind != Status::Kind::Ongoing) violation(script.size() - 1, "game ended during the opening");
  if (pos.to_move() != Player::Left) violation(script.size() - 1, "Left is not next to play");
  return true;
}

struct Rank4Embedding {
  Hypergraph h;
  int u_left;
  int u_right;
};

/// Maker-Maker hypergraph on V + {u_L, u_R}: blue edges gain u_L, red
/// edges gain u_R.
inline Rank4Embedding mm_rank4_embed(const Game& g) {
  if (max_edge_size(g.blue_edges()) > 3 || max_edge_size(g.red_edges()) > 3)
    throw Error(ErrorKind::EdgeTooLarge, "embedding needs edges of size at most 3");
  Rank4Embedding r;
  r.h.names = g.names();
  std::string ul = "u_L", ur = "u_R";
  while (g.index_of(ul)) ul += "'";
  while (g.index_of(ur)) ur += "'";
  r.u_left = g.num_vertices();
  r.u_right = r.u_left + 1;
  r.h.names.push_back(ul);
  r.h.names.push_back(ur);
  for (VertexSet e : g.blue_edges()) {
    e.insert(r.u_left);
    r.h.edges.push_back(e);
  }
  for (VertexSet e : g.red_edges()) {
    e.insert(r.u_right);
    r.h.edges.push_back(e);
  }
  return r;
}

/// Maker-Maker game on h: both players own every edge.
inline Game maker_maker_game(const Hypergraph& h) { return Game::from_indices(h.names, h.edges, h.edges); }

/// Right's move by priority: complete a red unit edge, block a blue unit
/// edge, take the center of an intact red P3, else the lowest free vertex.
inline int canonical_right_strategy(const Board& b) {
  if (b.free.empty()) throw Error(ErrorKind::InvalidPicks, "no move available");
  if (const auto red_units = unit_vertices(b.red); !red_units.empty()) return red_units.front();
  if (const auto blue_units = unit_vertices(b.blue); !blue_units.empty()) return blue_units.front();
  std::array<std::uint8_t, kMaxVertices> deg{};
  int center = -1;
  for (const auto& e : b.red) {
    if (e.size() != 2) continue;
    for (int v = e.front(); v >= 0; v = e.next(v))
      if (++deg[static_cast<std::size_t>(v)] >= 2 && (center < 0 || v < center)) center = v;
  }
  if (center >= 0) return center;
  return b.free.front();
}

enum class CanonicalResult { LeftNonLosing, RightWins };

inline const char* to_string(CanonicalResult r) {
  return r == CanonicalResult::LeftNonLosing ? "LeftNonLosing" : "RightWins";
}

struct CanonicalStats {
  std::uint64_t nodes = 0;
};

/// Left moves first; Right always answers with canonical_right_strategy.
/// LeftNonLosing iff some line of Left moves ends in a draw or a Left win.
inline CanonicalResult solve_vs_canonical_right(const Game& g, std::uint64_t node_limit = default_node_limit(),
                                                CanonicalStats* stats = nullptr) {
  if (max_edge_size(g.blue_edges()) > 3 || max_edge_size(g.red_edges()) > 2)
    throw Error(ErrorKind::EdgeTooLarge, "canonical strategy needs blue edges of size <= 3 and red <= 2");
  std::unordered_map<std::vector<std::uint64_t>, bool, TranspositionKeyHash> memo;
  std::uint64_t nodes = 0;
  auto key_of = [](const Board& b) {
    std::vector<std::uint64_t> k{b.free.word(0), b.free.word(1), b.blue.size()};
    for (const auto* list : {&b.blue, &b.red})
      for (const auto& e : *list) {
        k.push_back(e.word(0));
        k.push_back(e.word(1));
      }
    return k;
  };
  // Left to move on b: can Left avoid losing?
  auto left_survives = [&](auto&& self, const Board& b) -> bool {
    if (++nodes > node_limit) throw Error(ErrorKind::ResourceLimit, "canonical exploration budget exceeded");
    if (!unit_vertices(b.blue).empty() || b.free.empty()) return true;
    const VertexSet threats = unit_vertices(b.red);
    if (threats.size() >= 2) return false;
    auto key = key_of(b);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    bool ok = false;
    const VertexSet options = threats.empty() ? b.free : threats;
    for (int v = options.front(); v >= 0 && !ok; v = options.next(v)) {
      const Board b1 = after_pick(b, v, Player::Left);
      if (b1.free.empty()) {
        ok = true;
        break;
      }
      const int r = canonical_right_strategy(b1);
      if (pick_completes(b1, r, Player::Right)) continue;
      ok = self(self, after_pick(b1, r, Player::Right));
    }
    memo.emplace(std::move(key), ok);
    return ok;
  };
  const bool ok = left_survives(left_survives, g.board());
  if (stats) stats->nodes = nodes;
  return ok ? CanonicalResult::LeftNonLosing : CanonicalResult::RightWins;
}

}  // namespace apg
