#pragma once

#include <array>
#include <optional>
#include <vector>

#include "apg/board.hpp"
#include "apg/game.hpp"

namespace apg {

/// Blue and red graphs over a shared vertex set; every edge has size 2.
struct Graph2 {
  VertexSet vertices;
  std::array<VertexSet, kMaxVertices> blue{};
  std::array<VertexSet, kMaxVertices> red{};

  static Graph2 from_board(const Board& b) {
    Graph2 g;
    g.vertices = b.free;
    auto add = [](std::array<VertexSet, kMaxVertices>& adj, const EdgeList& edges) {
      for (const auto& e : edges) {
        if (e.size() != 2) throw Error(ErrorKind::EdgeTooLarge, "graph edges must have exactly two vertices");
        const int a = e.front(), c = e.next(a);
        adj[static_cast<std::size_t>(a)].insert(c);
        adj[static_cast<std::size_t>(c)].insert(a);
      }
    };
    add(g.blue, b.blue);
    add(g.red, b.red);
    return g;
  }

  VertexSet blue_nbrs(int v) const { return blue[static_cast<std::size_t>(v)] & vertices; }
  VertexSet red_nbrs(int v) const { return red[static_cast<std::size_t>(v)] & vertices; }

  /// Removes vertices together with their incident edges.
  void remove(const VertexSet& s) { vertices -= s; }
};

/// Some vertex of `keep` has two neighbors in `keep`.
inline bool has_p3(const std::array<VertexSet, kMaxVertices>& adj, const VertexSet& keep) {
  for (int v = keep.front(); v >= 0; v = keep.next(v))
    if ((adj[static_cast<std::size_t>(v)] & keep).size() >= 2) return true;
  return false;
}

struct VertexType {
  enum class Kind { Type1, Type2, Type3 };
  Kind kind;
  std::vector<int> path;  // walked alternating path; for Type1 the prefix ending at the branching vertex
  int witness = -1;       // Type1: the extra blue neighbor y
};

/// Walks the alternating path from u: red steps from odd positions, blue
/// steps from even ones. Requires a red matching and no unit edges.
inline VertexType classify(const Graph2& g, int u) {
  std::vector<int> path{u};
  VertexSet on = VertexSet::singleton(u);
  while (true) {
    const int cur = path.back();
    if (path.size() % 2 == 1) {
      const VertexSet partner = g.red_nbrs(cur) - on;
      if (partner.empty()) return {VertexType::Kind::Type2, path, -1};
      const int next = partner.front();
      path.push_back(next);
      on.insert(next);
    } else {
      const VertexSet off = g.blue_nbrs(cur) - on;
      const int cnt = off.size();
      if (cnt == 0) return {VertexType::Kind::Type3, path, -1};
      if (cnt >= 2) {
        const int first = off.front();
        return {VertexType::Kind::Type1, path, off.next(first)};
      }
      path.push_back(off.front());
      on.insert(off.front());
    }
  }
}

/// Deletes a Type3 path after checking that it leaves no partially
/// picked edge behind.
inline Graph2 reduce_type3(const Graph2& g, const std::vector<int>& path) {
  if (path.empty() || path.size() % 2 != 0) throw Error(ErrorKind::InvalidPath, "type-3 path must have even length");
  VertexSet odd, all;
  for (std::size_t i = 0; i < path.size(); ++i) {
    all.insert(path[i]);
    if (i % 2 == 0) odd.insert(path[i]);  // positions 1, 3, ... picked by Right
  }
  for (std::size_t i = 0; i < path.size(); ++i) {
    const int v = path[i];
    if (!(g.red_nbrs(v) - all).empty())
      throw Error(ErrorKind::InvalidPath, "red edge leaves the path at position " + std::to_string(i + 1));
    if (i % 2 == 1)
      for (int w = g.blue_nbrs(v).front(); w >= 0; w = g.blue_nbrs(v).next(w))
        if (!odd.contains(w))
          throw Error(ErrorKind::InvalidPath, "blue edge at position " + std::to_string(i + 1) + " survives");
  }
  Graph2 out = g;
  out.remove(all);
  if (has_p3(out.red, out.vertices)) throw Error(ErrorKind::InvalidPath, "red edges stopped being a matching");
  return out;
}

struct Preprocessed {
  std::optional<GameResult> decided;
  Board board;  // unit-free remainder when undecided
  Player to_move = Player::Left;
  std::vector<int> forced;  // vertices played along the way
};

/// Plays forced unit-edge answers until the position is decided or every
/// edge has size exactly 2.
inline Preprocessed preprocess_units(const Board& start, Player first) {
  Preprocessed p{std::nullopt, start, first, {}};
  canonicalize(p.board);
  while (true) {
    const Player mover = p.to_move;
    int alpha = 0, beta = 0;
    for (const auto& e : p.board.edges_of(mover)) alpha += e.size() == 1;
    for (const auto& e : p.board.edges_of(opponent(mover))) beta += e.size() == 1;
    if (alpha >= 1) {
      p.decided = win_for(mover);
      return p;
    }
    if (beta >= 2) {
      p.decided = win_for(opponent(mover));
      return p;
    }
    if (beta == 1) {
      const int v = unit_vertices(p.board.edges_of(opponent(mover))).front();
      p.board = after_pick(p.board, v, mover);
      p.forced.push_back(v);
      p.to_move = opponent(mover);
      continue;
    }
    if (p.board.free.empty()) p.decided = GameResult::Draw;
    return p;
  }
}

/// Left to move on a unit-free position: Left wins iff there is a blue P3.
inline bool left_to_move_rule(const Graph2& g) { return has_p3(g.blue, g.vertices); }

/// Right to move on a unit-free position: does Left win?
inline bool right_to_move_rule(Graph2 g) {
  if (has_p3(g.red, g.vertices)) return false;
  for (bool reduced = true; reduced;) {
    reduced = false;
    for (int u = g.vertices.front(); u >= 0; u = g.vertices.next(u)) {
      const VertexType t = classify(g, u);
      if (t.kind == VertexType::Kind::Type3) {
        g = reduce_type3(g, t.path);
        reduced = true;
        break;
      }
    }
  }
  if (g.vertices.empty()) return false;
  for (int u = g.vertices.front(); u >= 0; u = g.vertices.next(u)) {
    const VertexType t = classify(g, u);
    if (t.kind != VertexType::Kind::Type2) continue;
    VertexSet rest = g.vertices;
    for (int v : t.path) rest.erase(v);
    if (!has_p3(g.blue, rest)) return false;
  }
  return true;
}

/// Does Left have a winning strategy with `first` to move?
inline bool left_wins22(const Board& b, Player first) {
  const Preprocessed p = preprocess_units(b, first);
  if (p.decided) return *p.decided == GameResult::LeftWin;
  const Graph2 g = Graph2::from_board(p.board);
  return p.to_move == Player::Left ? left_to_move_rule(g) : right_to_move_rule(g);
}

inline bool fits22(const Board& b) { return max_edge_size(b.blue) <= 2 && max_edge_size(b.red) <= 2; }

/// Exact value of a game whose edges all have at most two vertices.
inline GameResult solve22(const Board& b, Player first) {
  if (!fits22(b)) throw Error(ErrorKind::EdgeTooLarge, "poly22 needs edges of size at most 2");
  const bool left = left_wins22(b, first);
  const bool right = left_wins22(swap_colors(b), opponent(first));
  if (left && right) throw Error(ErrorKind::IllegalOutcome, "both players found winning");
  return left ? GameResult::LeftWin : right ? GameResult::RightWin : GameResult::Draw;
}

inline GameResult solve22(const Game& g, Player first) { return solve22(g.board(), first); }

inline Outcome outcome22(const Game& g) {
  return Outcome::from_results(solve22(g, Player::Left), solve22(g, Player::Right));
}

}  // namespace apg
