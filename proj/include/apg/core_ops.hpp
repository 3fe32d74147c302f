#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apg/game.hpp"

namespace apg {

/// Per-vertex edge membership over the concatenated edge list (blue first,
/// then red), one bit row per vertex.
class Membership {
 public:
  Membership(const EdgeList& blue, const EdgeList& red, int num_vertices)
      : words_((blue.size() + red.size() + 63) / 64), n_(num_vertices) {
    rows_.assign(static_cast<std::size_t>(n_) * words_, 0);
    std::size_t idx = 0;
    for (const auto* edges : {&blue, &red}) {
      for (const auto& e : *edges) {
        e.for_each([&](int v) { rows_[static_cast<std::size_t>(v) * words_ + idx / 64] |= 1ULL << (idx % 64); });
        ++idx;
      }
    }
  }

  /// Every edge containing u also contains v.
  bool implies(int u, int v) const {
    const auto* a = row(u);
    const auto* b = row(v);
    for (std::size_t i = 0; i < words_; ++i)
      if (a[i] & ~b[i]) return false;
    return true;
  }

  bool same(int u, int v) const { return implies(u, v) && implies(v, u); }

  bool isolated(int u) const {
    const auto* a = row(u);
    for (std::size_t i = 0; i < words_; ++i)
      if (a[i]) return false;
    return true;
  }

 private:
  const std::uint64_t* row(int v) const { return rows_.data() + static_cast<std::size_t>(v) * words_; }

  std::size_t words_;
  int n_;
  std::vector<std::uint64_t> rows_;
};

/// Vertices u with {u} an edge of either color.
inline VertexSet unit_edge_vertices(const Game& g) {
  return unit_vertices(g.blue_edges()) | unit_vertices(g.red_edges());
}

struct TwinReduction {
  Game game;
  /// Removed pairs, as (picked for Left, picked for Right).
  std::vector<std::pair<std::string, std::string>> removed;
};

/// Repeatedly removes a pair of twins u, v (identical edge membership, no
/// unit edge on either) by replacing the game with G_u^v. Vertices in no
/// edge are mutual twins and leave in pairs; a single leftover is kept,
/// since removing it would flip move parity.
inline TwinReduction twin_reduce(const Game& game) {
  TwinReduction r{game, {}};
  while (true) {
    const Game& g = r.game;
    const int n = g.num_vertices();
    const Membership m(g.blue_edges(), g.red_edges(), n);
    const VertexSet units = unit_edge_vertices(g);
    std::optional<std::pair<int, int>> pair;
    for (int u = 0; u < n && !pair; ++u) {
      if (units.contains(u)) continue;
      for (int v = u + 1; v < n; ++v) {
        if (units.contains(v)) continue;
        if (m.same(u, v)) {
          pair = std::make_pair(u, v);
          break;
        }
      }
    }
    if (!pair) return r;
    r.removed.emplace_back(g.name(pair->first), g.name(pair->second));
    r.game = update(g, VertexSet::singleton(pair->first), VertexSet::singleton(pair->second));
  }
}

/// Moves that can be dropped from either player's candidate list: u is
/// reported when some v != u outside unit edges satisfies "every edge
/// containing u contains v". Among twins only the lowest index survives, so
/// the undominated set is never empty.
inline VertexSet dominated_moves(const Game& g, Player /*mover*/) {
  const int n = g.num_vertices();
  const Membership m(g.blue_edges(), g.red_edges(), n);
  const VertexSet units = unit_edge_vertices(g);
  VertexSet out;
  for (int u = 0; u < n; ++u) {
    if (units.contains(u)) continue;
    for (int v = 0; v < n; ++v) {
      if (v == u || units.contains(v)) continue;
      if (m.implies(u, v) && (!m.implies(v, u) || v < u)) {
        out.insert(u);
        break;
      }
    }
  }
  return out;
}

struct GreedyMove {
  int pick;    // v: the move to play
  int answer;  // u: the opponent's forced reply
  friend bool operator==(const GreedyMove&, const GreedyMove&) = default;
};

/// All (v, u) with {u, v} an edge of `player`'s color and every edge
/// containing u also containing v. Empty when any unit edge exists.
inline std::vector<GreedyMove> greedy_moves(const Game& g, Player player) {
  std::vector<GreedyMove> out;
  if (!unit_edge_vertices(g).empty()) return out;
  const Membership m(g.blue_edges(), g.red_edges(), g.num_vertices());
  for (const auto& e : g.edges_of(player)) {
    if (e.size() != 2) continue;
    const int a = e.front();
    const int b = e.next(a);
    if (m.implies(a, b)) out.push_back({b, a});
    if (m.implies(b, a)) out.push_back({a, b});
  }
  return out;
}

/// A move that is optimal for `player` moving first and forces the reply.
inline std::optional<GreedyMove> greedy_move(const Game& g, Player player) {
  auto all = greedy_moves(g, player);
  if (all.empty()) return std::nullopt;
  return all.front();
}

/// Set of pairwise disjoint vertex pairs.
class Pairing {
 public:
  Pairing() = default;
  explicit Pairing(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
    VertexSet seen;
    for (auto [a, b] : pairs_) {
      if (a == b) throw Error(ErrorKind::InvalidPicks, "pair with a repeated vertex");
      if (seen.contains(a) || seen.contains(b)) throw Error(ErrorKind::InvalidPicks, "pairs overlap");
      seen.insert(a);
      seen.insert(b);
    }
  }

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

 private:
  std::vector<std::pair<int, int>> pairs_;
};

/// True iff every edge of the attacker's color (the defender's opponent)
/// contains a whole pair, i.e. the defender can block by answering inside
/// each pair.
inline bool check_pairing(const Game& g, const Pairing& pairing, Player defender) {
  for (auto [a, b] : pairing.pairs())
    if (a < 0 || b < 0 || a >= g.num_vertices() || b >= g.num_vertices())
      throw Error(ErrorKind::UnknownVertex, "pairing vertex outside the game");
  for (const auto& e : g.edges_of(opponent(defender))) {
    bool hit = false;
    for (auto [a, b] : pairing.pairs()) {
      if (e.contains(a) && e.contains(b)) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

/// Drops edges that strictly contain another edge of the same color. Outcome
/// preserving; never applied implicitly.
inline EdgeList prune_superset_edges(const EdgeList& edges, EdgeList* removed = nullptr) {
  EdgeList out;
  for (const auto& e : edges) {
    bool superset = false;
    for (const auto& f : edges) {
      if (f != e && f.subset_of(e)) {
        superset = true;
        break;
      }
    }
    if (superset) {
      if (removed) removed->push_back(e);
    } else {
      out.push_back(e);
    }
  }
  return out;
}

struct Normalization {
  Game game;
  EdgeList removed_blue;
  EdgeList removed_red;
};

inline Normalization normalize_supersets(const Game& g) {
  Normalization n;
  auto blue = prune_superset_edges(g.blue_edges(), &n.removed_blue);
  auto red = prune_superset_edges(g.red_edges(), &n.removed_red);
  n.game = Game::from_indices(g.names(), std::move(blue), std::move(red));
  return n;
}

}  // namespace apg
