#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "apg/board.hpp"
#include "apg/game.hpp"
#include "apg/transposition.hpp"

namespace apg {

inline constexpr std::uint64_t kDefaultNodeLimit = 50'000'000;

/// Node budget: APG_NODE_LIMIT if set to a positive integer, else 50M.
inline std::uint64_t default_node_limit() {
  if (const char* env = std::getenv("APG_NODE_LIMIT")) {
    std::uint64_t v = 0;
    const std::string_view s(env);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) return v;
  }
  return kDefaultNodeLimit;
}

struct SolveStats {
  std::uint64_t nodes_expanded = 0;
  std::uint64_t memo_hits = 0;
  int max_depth = 0;
  std::chrono::nanoseconds elapsed{0};

  SolveStats& operator+=(const SolveStats& o) {
    nodes_expanded += o.nodes_expanded;
    memo_hits += o.memo_hits;
    max_depth = std::max(max_depth, o.max_depth);
    elapsed += o.elapsed;
    return *this;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "nodes_expanded: " << nodes_expanded << "\n"
       << "memo_hits: " << memo_hits << "\n"
       << "max_depth: " << max_depth << "\n"
       << "elapsed_ms: " << std::chrono::duration<double, std::milli>(elapsed).count() << "\n";
    return os.str();
  }
};

struct SolverOptions {
  bool shortcuts = true;         // unit wins, forced blocks, double threats, win in two
  bool twins = true;             // twin and dead-pair removal at node entry
  bool dominance = true;         // dominated-move pruning
  bool greedy = true;            // greedy move on a private pair
  bool superset_pruning = true;  // drop edges containing a same-colored edge
  bool memo = true;
  int memo_min_free = 6;
  std::uint64_t node_limit = default_node_limit();

  /// Plain memoized minimax: only fills end the game.
  static SolverOptions no_pruning() {
    SolverOptions o;
    o.shortcuts = o.twins = o.dominance = o.greedy = o.superset_pruning = false;
    return o;
  }
};

/// Natural number or +infinity.
class Delay {
 public:
  static constexpr Delay infinite() { return Delay(-1); }
  static constexpr Delay finite(int v) { return Delay(v); }

  constexpr bool is_infinite() const { return v_ < 0; }
  constexpr int value() const { return v_; }

  std::string to_string() const { return is_infinite() ? "inf" : std::to_string(v_); }

  friend constexpr bool operator==(Delay a, Delay b) { return a.v_ == b.v_; }
  friend constexpr bool operator<(Delay a, Delay b) {
    if (a.is_infinite()) return false;
    return b.is_infinite() || a.v_ < b.v_;
  }
  friend constexpr bool operator<=(Delay a, Delay b) { return !(b < a); }

 private:
  constexpr explicit Delay(int v) : v_(v) {}
  int v_;
};

enum class MoveTag { Winning, Forced, Pairing, Arbitrary };

inline const char* to_string(MoveTag t) {
  switch (t) {
    case MoveTag::Winning: return "winning";
    case MoveTag::Forced: return "forced";
    case MoveTag::Pairing: return "pairing";
    case MoveTag::Arbitrary: return "arbitrary";
  }
  return "?";
}

struct TraceStep {
  std::string position;  // updated game before the move
  Player mover;
  int vertex;
  std::string vertex_name;
  MoveTag tag;
};

struct StrategyTrace {
  std::vector<TraceStep> steps;
  Status final_status;
  GameResult value = GameResult::Draw;

  int moves_by(Player p) const {
    return static_cast<int>(std::count_if(steps.begin(), steps.end(), [p](const TraceStep& s) { return s.mover == p; }));
  }

  std::string to_text() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < steps.size(); ++i) {
      const auto& s = steps[i];
      os << "trace." << i << ": " << to_string(s.mover) << " " << s.vertex_name << " [" << to_string(s.tag)
         << "] " << s.position << "\n";
    }
    os << "trace.final: " << final_status.to_string() << "\n";
    return os.str();
  }
};

/// Compact one-line rendering of a board with vertex names.
inline std::string board_summary(const Board& b, const std::vector<std::string>& names) {
  std::ostringstream os;
  auto edges = [&](const EdgeList& list) {
    EdgeList sorted = list;
    std::sort(sorted.begin(), sorted.end(), lex_less<2>);
    os << "[";
    bool first_edge = true;
    for (const auto& e : sorted) {
      os << (first_edge ? "" : " ") << "{";
      bool first_v = true;
      e.for_each([&](int v) {
        os << (first_v ? "" : ",") << names[static_cast<std::size_t>(v)];
        first_v = false;
      });
      os << "}";
      first_edge = false;
    }
    os << "]";
  };
  os << "free=" << b.free.size() << " blue=";
  edges(b.blue);
  os << " red=";
  edges(b.red);
  return os.str();
}

/// Exact three-valued negamax with alpha-beta, a transposition table and the
/// lemma-based reductions. One instance per thread.
class Solver {
 public:
  explicit Solver(SolverOptions opts = {}) : opts_(opts) {}

  const SolverOptions& options() const { return opts_; }
  const SolveStats& stats() const { return stats_; }
  void reset_stats() { stats_ = {}; }
  void clear_memo() { tt_.clear(); }

  /// Value of the board with `mover` to play, from the mover's side.
  int value(const Board& b, Player mover) {
    Timer t(stats_);
    return root_value(b, mover, -1, 1);
  }

  GameResult solve(const Board& b, Player first) { return result_from_score(value(b, first), first); }
  GameResult solve(const Game& g, Player first) { return solve(g.board(), first); }

  Outcome outcome(const Game& g) {
    const Board b = g.board();
    return Outcome::from_results(solve(b, Player::Left), solve(b, Player::Right));
  }

  /// An immediate win if there is one, else the lowest-index move achieving
  /// the value of the position.
  std::pair<int, GameResult> best_move(const Board& b, Player mover) {
    if (b.free.empty()) throw Error(ErrorKind::InvalidPicks, "no move available");
    if (const VertexSet now = unit_vertices(b.edges_of(mover)) & b.free; !now.empty())
      return {now.front(), win_for(mover)};
    Timer t(stats_);
    int best = -2, best_v = -1;
    for (int v = b.free.front(); v >= 0; v = b.free.next(v)) {
      int val;
      if (pick_completes(b, v, mover)) {
        val = 1;
      } else {
        val = -root_value(after_pick(b, v, mover), opponent(mover), -1, best < -1 ? 1 : -best);
      }
      if (val > best) {
        best = val;
        best_v = v;
        if (best == 1) break;
      }
    }
    return {best_v, result_from_score(best, mover)};
  }

  std::pair<int, GameResult> best_move(const Position& p) {
    if (p.status().kind != Status::Kind::Ongoing) throw Error(ErrorKind::InvalidPicks, "game is over");
    return best_move(p.board(), p.to_move());
  }

  StrategyTrace self_play(const Game& g, Player first) {
    StrategyTrace trace;
    trace.value = solve(g, first);
    Position pos = Position::start(g, first);
    int last = -1;
    while (pos.status().kind == Status::Kind::Ongoing) {
      const Board& b = pos.board();
      const Player mover = pos.to_move();
      auto [v, res] = best_move(b, mover);
      const VertexSet threats = unit_vertices(b.edges_of(opponent(mover)));
      MoveTag tag;
      if (pick_completes(b, v, mover)) {
        tag = MoveTag::Winning;
      } else if (threats.size() == 1) {
        tag = MoveTag::Forced;
      } else if (res == win_for(mover)) {
        tag = MoveTag::Winning;
      } else if (last >= 0 && answers_in_pair(g.board(), last, v, mover)) {
        tag = MoveTag::Pairing;
      } else {
        tag = MoveTag::Arbitrary;
      }
      trace.steps.push_back({board_summary(b, g.names()), mover, v, g.name(v), tag});
      pos = pos.play(v);
      last = v;
    }
    trace.final_status = pos.status();
    return trace;
  }

  /// Scoring game: the protagonist moves first, the antagonist may pass.
  /// The score is the number of passes before the protagonist fills an
  /// edge, +inf if that never happens or the antagonist fills one first.
  Delay delay(const Board& b, Player protagonist) {
    Timer t(stats_);
    delay_memo_.clear();
    Board start = b;
    canonicalize(start);
    const int d = delay_rec(start, protagonist, protagonist, 0);
    return d >= kInf ? Delay::infinite() : Delay::finite(d);
  }
  Delay delay(const Game& g, Player protagonist) { return delay(g.board(), protagonist); }

 private:
  static constexpr int kInf = INT_MAX / 4;

  struct Timer {
    explicit Timer(SolveStats& s) : stats(s), t0(std::chrono::steady_clock::now()) {}
    ~Timer() { stats.elapsed += std::chrono::steady_clock::now() - t0; }
    SolveStats& stats;
    std::chrono::steady_clock::time_point t0;
  };

  struct Node {
    std::size_t begin;
    std::uint32_t nblue;
    std::uint32_t nred;
    VertexSet free;

    std::uint32_t mine_begin(Player p) const { return p == Player::Left ? 0 : nblue; }
    std::uint32_t mine_count(Player p) const { return p == Player::Left ? nblue : nred; }
    std::uint32_t edges() const { return nblue + nred; }
  };

  // A pairing answer: v shares an edge of the opponent's color with the
  // opponent's last move.
  static bool answers_in_pair(const Board& original, int last, int v, Player mover) {
    for (const auto& e : original.edges_of(opponent(mover)))
      if (e.contains(last) && e.contains(v)) return true;
    return false;
  }

  int root_value(const Board& b, Player mover, int alpha, int beta) {
    arena_.clear();
    Node n{0, 0, 0, b.free};
    for (const auto& e : b.blue) arena_.push_back(e);
    n.nblue = static_cast<std::uint32_t>(arena_.size());
    for (const auto& e : b.red) arena_.push_back(e);
    n.nred = static_cast<std::uint32_t>(arena_.size()) - n.nblue;
    canonical_ranges(n);
    return search(n, mover, alpha, beta, 0);
  }

  // Sorts and dedupes both color ranges of a node at the top of the arena.
  void canonical_ranges(Node& n) {
    auto bb = arena_.begin() + static_cast<std::ptrdiff_t>(n.begin);
    auto be = bb + n.nblue;
    std::sort(bb, be);
    auto bnew = std::unique(bb, be);
    auto re = be + n.nred;
    std::sort(be, re);
    auto rnew = std::unique(be, re);
    n.nblue = static_cast<std::uint32_t>(bnew - bb);
    n.nred = static_cast<std::uint32_t>(rnew - be);
    auto out = std::move(be, rnew, bnew);
    arena_.erase(out, arena_.end());
  }

  Node make_child(const Node& n, int v, Player mover) {
    Node c{arena_.size(), 0, 0, n.free};
    c.free.erase(v);
    const bool left = mover == Player::Left;
    for (std::uint32_t i = 0; i < n.nblue; ++i) {
      VertexSet e = arena_[n.begin + i];
      if (left) {
        e.erase(v);
        arena_.push_back(e);
      } else if (!e.contains(v)) {
        arena_.push_back(e);
      }
    }
    c.nblue = static_cast<std::uint32_t>(arena_.size() - c.begin);
    for (std::uint32_t i = 0; i < n.nred; ++i) {
      VertexSet e = arena_[n.begin + n.nblue + i];
      if (!left) {
        e.erase(v);
        arena_.push_back(e);
      } else if (!e.contains(v)) {
        arena_.push_back(e);
      }
    }
    c.nred = static_cast<std::uint32_t>(arena_.size() - c.begin) - c.nblue;
    canonical_ranges(c);
    return c;
  }

  // Copies the node's edges that avoid `removed` to a fresh segment,
  // optionally also dropping flagged edges. The free set is kept.
  Node rebuild(const Node& n, const VertexSet& removed, const std::vector<char>* drop) {
    Node c{arena_.size(), 0, 0, n.free};
    for (std::uint32_t i = 0; i < n.edges(); ++i) {
      const VertexSet e = arena_[n.begin + i];
      if (e.intersects(removed) || (drop && (*drop)[i])) continue;
      arena_.push_back(e);
      if (i < n.nblue) ++c.nblue;
      else ++c.nred;
    }
    return c;
  }

  // Flags edges that strictly contain another edge of the same color.
  bool flag_supersets(const Node& n, std::vector<char>& drop) {
    drop.assign(n.edges(), 0);
    bool any = false;
    auto scan = [&](std::uint32_t lo, std::uint32_t cnt) {
      for (std::uint32_t i = lo; i < lo + cnt; ++i) {
        const VertexSet& e = arena_[n.begin + i];
        const int se = e.size();
        if (se == 1) continue;
        for (std::uint32_t j = lo; j < lo + cnt; ++j) {
          if (j == i) continue;
          const VertexSet& f = arena_[n.begin + j];
          if (f.size() < se && f.subset_of(e)) {
            drop[i] = 1;
            any = true;
            break;
          }
        }
      }
    };
    scan(0, n.nblue);
    scan(n.nblue, n.nred);
    return any;
  }

  // Membership rows for the free vertices of a node.
  void build_rows(const Node& n) {
    words_ = (n.edges() + 63) / 64;
    if (words_ == 0) words_ = 1;
    rows_.assign(static_cast<std::size_t>(kMaxVertices) * words_, 0);
    for (std::uint32_t i = 0; i < n.edges(); ++i)
      arena_[n.begin + i].for_each([&](int v) { rows_[static_cast<std::size_t>(v) * words_ + i / 64] |= 1ULL << (i % 64); });
  }
  const std::uint64_t* row(int v) const { return rows_.data() + static_cast<std::size_t>(v) * words_; }
  bool implies(int u, int v) const {
    const auto* a = row(u);
    const auto* b = row(v);
    for (std::size_t i = 0; i < words_; ++i)
      if (a[i] & ~b[i]) return false;
    return true;
  }
  bool row_equal(int u, int v) const {
    const auto* a = row(u);
    const auto* b = row(v);
    for (std::size_t i = 0; i < words_; ++i)
      if (a[i] != b[i]) return false;
    return true;
  }
  std::uint64_t row_hash(int v) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    const auto* a = row(v);
    for (std::size_t i = 0; i < words_; ++i) h = (h ^ a[i]) * 0xff51afd7ed558ccdULL;
    return h ^ (h >> 31);
  }

  struct TwinPlan {
    VertexSet removed;  // vertices leaving the board
    VertexSet kill;     // edges meeting this set disappear
  };

  // Twin reduction in one sweep: each live twin group loses all its edges
  // and all members but (size mod 2), the survivor becoming dead; dead
  // vertices leave in pairs. Unit-edge vertices never take part.
  TwinPlan twin_plan(const Node& n, const VertexSet& units) {
    TwinPlan plan;
    std::array<std::pair<std::uint64_t, int>, kMaxVertices> keyed;
    int cnt = 0;
    VertexSet dead;
    n.free.for_each([&](int v) {
      if (units.contains(v)) return;
      bool zero = true;
      for (std::size_t w = 0; w < words_; ++w) zero &= row(v)[w] == 0;
      if (zero) dead.insert(v);
      else keyed[static_cast<std::size_t>(cnt++)] = {row_hash(v), v};
    });
    std::sort(keyed.begin(), keyed.begin() + cnt);
    VertexSet grouped;
    for (int i = 0; i < cnt; ++i) {
      const auto [h, u] = keyed[static_cast<std::size_t>(i)];
      if (grouped.contains(u)) continue;
      VertexSet members = VertexSet::singleton(u);
      for (int j = i + 1; j < cnt && keyed[static_cast<std::size_t>(j)].first == h; ++j) {
        const int v = keyed[static_cast<std::size_t>(j)].second;
        if (!grouped.contains(v) && row_equal(u, v)) members.insert(v);
      }
      grouped |= members;
      const int size = members.size();
      if (size < 2) continue;
      plan.kill |= members;
      if (size % 2 == 1) members.erase(members.front());
      plan.removed |= members;
    }
    int pairs_out = dead.size() - dead.size() % 2;
    for (int v = dead.front(); v >= 0 && pairs_out > 0; v = dead.next(v), --pairs_out) plan.removed.insert(v);
    return plan;
  }

  void build_key(const Node& n, Player mover) {
    VertexSet live;
    for (std::uint32_t i = 0; i < n.edges(); ++i) live |= arena_[n.begin + i];
    const auto dead = static_cast<std::uint64_t>(n.free.size() - live.size());
    key_.clear();
    key_.push_back((mover == Player::Left ? 0ULL : 1ULL) | dead << 1 | static_cast<std::uint64_t>(n.nblue) << 16 |
                   static_cast<std::uint64_t>(n.nred) << 40);
    for (std::uint32_t i = 0; i < n.edges(); ++i) {
      const VertexSet& e = arena_[n.begin + i];
      key_.push_back(e.word(0));
      key_.push_back(e.word(1));
    }
  }

  int search(Node n, Player mover, int alpha, int beta, int depth) {
    if (++stats_.nodes_expanded > opts_.node_limit)
      throw Error(ErrorKind::ResourceLimit, "node budget of " + std::to_string(opts_.node_limit) + " exceeded");
    stats_.max_depth = std::max(stats_.max_depth, depth);
    const Player opp = opponent(mover);

    VertexSet my_units, their_units;
    {
      const std::uint32_t mb = n.mine_begin(mover), mc = n.mine_count(mover);
      const std::uint32_t tb = n.mine_begin(opp), tc = n.mine_count(opp);
      for (std::uint32_t i = 0; i < mc; ++i) {
        const VertexSet& e = arena_[n.begin + mb + i];
        if (e.size() == 1) my_units |= e;
      }
      for (std::uint32_t i = 0; i < tc; ++i) {
        const VertexSet& e = arena_[n.begin + tb + i];
        if (e.size() == 1) their_units |= e;
      }
    }
    if (n.free.empty()) return 0;

    if (opts_.shortcuts) {
      if (!my_units.empty()) return 1;
      const int threats = their_units.size();
      if (threats >= 2) return -1;
      if (threats == 1) {
        const int v = their_units.front();
        const Node c = make_child(n, v, mover);
        const int val = -search(c, opp, -beta, -alpha, depth + 1);
        arena_.resize(c.begin);
        return val;
      }
    }

    // Normalization: superset edges, then twins, to a fixpoint.
    const VertexSet units = my_units | their_units;
    if (opts_.superset_pruning || opts_.twins) {
      std::vector<char> drop;
      while (true) {
        bool changed = false;
        if (opts_.superset_pruning && flag_supersets(n, drop)) {
          n = rebuild(n, VertexSet{}, &drop);
          changed = true;
        }
        if (opts_.twins) {
          build_rows(n);
          const TwinPlan plan = twin_plan(n, units);
          if (!plan.removed.empty()) {
            Node c = rebuild(n, plan.kill, nullptr);
            c.free = n.free - plan.removed;
            n = c;
            changed = true;
          }
        }
        if (!changed) break;
      }
    }

    const std::uint32_t mine_cnt = n.mine_count(mover), theirs_cnt = n.mine_count(opp);
    if (opts_.shortcuts) {
      if (mine_cnt == 0 && theirs_cnt == 0) return 0;
      if (mine_cnt == 0) {
        if (alpha >= 0) return 0;
        beta = std::min(beta, 0);
      } else if (theirs_cnt == 0) {
        if (beta <= 0) return 0;
        alpha = std::max(alpha, 0);
      }
    }

    const bool use_memo = opts_.memo && n.free.size() >= opts_.memo_min_free;
    if (use_memo) {
      build_key(n, mover);
      if (const auto* e = tt_.find(key_)) {
        if (e->lower >= beta || e->lower == e->upper) {
          ++stats_.memo_hits;
          return e->lower;
        }
        if (e->upper <= alpha) {
          ++stats_.memo_hits;
          return e->upper;
        }
        alpha = std::max<int>(alpha, e->lower);
        beta = std::min<int>(beta, e->upper);
      }
    }
    const int alpha0 = alpha, beta0 = beta;

    // Candidate moves.
    std::array<std::uint8_t, kMaxVertices> moves;
    int nmoves = 0;
    const bool need_rows = opts_.dominance || opts_.greedy || opts_.shortcuts;
    if (need_rows) build_rows(n);

    bool decided_by_two = false;
    int greedy_pick = -1;
    if (opts_.shortcuts || opts_.greedy) {
      // mover's pairs: win in two (a vertex in two of them), greedy move.
      std::array<std::uint8_t, kMaxVertices> pair_deg{};
      const std::uint32_t mb = n.mine_begin(mover);
      const bool no_units = units.empty();
      for (std::uint32_t i = 0; i < mine_cnt && !decided_by_two; ++i) {
        const VertexSet& e = arena_[n.begin + mb + i];
        if (e.size() != 2) continue;
        const int a = e.front(), b = e.next(a);
        if (opts_.shortcuts && their_units.empty()) {
          if (++pair_deg[static_cast<std::size_t>(a)] >= 2 || ++pair_deg[static_cast<std::size_t>(b)] >= 2)
            decided_by_two = true;
        }
        if (opts_.greedy && no_units && greedy_pick < 0) {
          if (implies(a, b)) greedy_pick = b;
          else if (implies(b, a)) greedy_pick = a;
        }
      }
    }
    if (decided_by_two) return 1;

    if (greedy_pick >= 0) {
      moves[0] = static_cast<std::uint8_t>(greedy_pick);
      nmoves = 1;
    } else {
      std::array<int, kMaxVertices> score{};
      const std::uint32_t mb = n.mine_begin(mover), tb = n.mine_begin(opp);
      for (std::uint32_t i = 0; i < mine_cnt; ++i) {
        const VertexSet& e = arena_[n.begin + mb + i];
        const int w = e.size() <= 2 ? 64 : 4;
        e.for_each([&](int v) { score[static_cast<std::size_t>(v)] += w; });
      }
      for (std::uint32_t i = 0; i < theirs_cnt; ++i) {
        const VertexSet& e = arena_[n.begin + tb + i];
        const int w = e.size() <= 2 ? 32 : 3;
        e.for_each([&](int v) { score[static_cast<std::size_t>(v)] += w; });
      }
      VertexSet dominated;
      if (opts_.dominance) {
        n.free.for_each([&](int u) {
          if (units.contains(u)) return;
          for (int v = n.free.front(); v >= 0; v = n.free.next(v)) {
            if (v == u || units.contains(v)) continue;
            if (implies(u, v) && (v < u || !implies(v, u))) {
              dominated.insert(u);
              return;
            }
          }
        });
      }
      n.free.for_each([&](int v) {
        if (!dominated.contains(v)) moves[static_cast<std::size_t>(nmoves++)] = static_cast<std::uint8_t>(v);
      });
      std::stable_sort(moves.begin(), moves.begin() + nmoves,
                       [&](std::uint8_t a, std::uint8_t b) { return score[a] > score[b]; });
    }

    int best = -1;
    for (int i = 0; i < nmoves; ++i) {
      const int v = moves[static_cast<std::size_t>(i)];
      int val;
      if (my_units.contains(v)) {
        val = 1;
      } else {
        const Node c = make_child(n, v, mover);
        val = -search(c, opp, -beta, -alpha, depth + 1);
        arena_.resize(c.begin);
      }
      if (val > best) {
        best = val;
        if (best > alpha) alpha = best;
        if (alpha >= beta) break;
      }
    }

    if (use_memo) {
      build_key(n, mover);
      TranspositionTable::Entry e;
      if (const auto* old = tt_.find(key_)) e = *old;
      if (best <= alpha0) {
        e.upper = static_cast<std::int8_t>(std::min<int>(e.upper, best));
      } else if (best >= beta0) {
        e.lower = static_cast<std::int8_t>(std::max<int>(e.lower, best));
      } else {
        e.lower = e.upper = static_cast<std::int8_t>(best);
      }
      tt_.store(key_, e);
    }
    return best;
  }

  // Delay search on boards; small inputs only.
  int delay_rec(const Board& b, Player mover, Player protagonist, int depth) {
    if (++stats_.nodes_expanded > opts_.node_limit)
      throw Error(ErrorKind::ResourceLimit, "node budget of " + std::to_string(opts_.node_limit) + " exceeded");
    stats_.max_depth = std::max(stats_.max_depth, depth);
    const Player antagonist = opponent(protagonist);
    std::vector<std::uint64_t> key;
    key.reserve(2 + 2 * (b.blue.size() + b.red.size()));
    key.push_back(mover == Player::Left ? 0 : 1);
    key.push_back(static_cast<std::uint64_t>(b.free.size()) << 32 | b.blue.size());
    for (const auto* list : {&b.blue, &b.red})
      for (const auto& e : *list) {
        key.push_back(e.word(0));
        key.push_back(e.word(1));
      }
    if (auto it = delay_memo_.find(key); it != delay_memo_.end()) {
      ++stats_.memo_hits;
      return it->second;
    }
    int result;
    if (mover == protagonist) {
      const VertexSet threats = unit_vertices(b.edges_of(antagonist));
      if (!unit_vertices(b.edges_of(protagonist)).empty()) {
        result = 0;
      } else if (b.free.empty() || threats.size() >= 2) {
        result = kInf;
      } else {
        result = kInf;
        const VertexSet options = threats.empty() ? b.free : threats;
        for (int v = options.front(); v >= 0; v = options.next(v))
          result = std::min(result, delay_rec(after_pick(b, v, mover), antagonist, protagonist, depth + 1));
      }
    } else {
      if (!unit_vertices(b.edges_of(antagonist)).empty() || b.free.empty()) {
        result = kInf;
      } else {
        const int pass = delay_rec(b, protagonist, protagonist, depth + 1);
        result = pass >= kInf ? kInf : pass + 1;
        for (int v = b.free.front(); v >= 0 && result < kInf; v = b.free.next(v))
          result = std::max(result, delay_rec(after_pick(b, v, mover), protagonist, protagonist, depth + 1));
      }
    }
    delay_memo_.emplace(std::move(key), result);
    return result;
  }

  SolverOptions opts_;
  SolveStats stats_;
  TranspositionTable tt_;
  std::vector<VertexSet> arena_;
  std::vector<std::uint64_t> rows_;
  std::size_t words_ = 1;
  std::vector<std::uint64_t> key_;
  std::unordered_map<std::vector<std::uint64_t>, int, TranspositionKeyHash> delay_memo_;
};

inline GameResult solve(const Game& g, Player first) { return Solver().solve(g, first); }
inline Outcome outcome(const Game& g) { return Solver().outcome(g); }
inline std::pair<int, GameResult> best_move(const Position& p) { return Solver().best_move(p); }
inline StrategyTrace self_play(const Game& g, Player first) { return Solver().self_play(g, first); }
inline Delay delay(const Game& g, Player protagonist) { return Solver().delay(g, protagonist); }

}  // namespace apg
