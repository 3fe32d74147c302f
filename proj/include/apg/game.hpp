#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "apg/board.hpp"
#include "apg/error.hpp"
#include "apg/outcome.hpp"
#include "apg/vertex_set.hpp"

namespace apg {

/// Raised when an update fills an edge: the position is terminal.
class AlreadyWonError : public Error {
 public:
  AlreadyWonError(std::optional<Player> winner, const std::string& what)
      : Error(ErrorKind::AlreadyWon, what), winner_(winner) {}
  std::optional<Player> winner() const noexcept { return winner_; }

 private:
  std::optional<Player> winner_;
};

/// An achievement positional game: named vertices plus blue (Left) and red
/// (Right) winning sets. Immutable once built; edges are kept deduplicated
/// and sorted by their element sequence.
class Game {
 public:
  Game() = default;

  static Game from_indices(std::vector<std::string> names, EdgeList blue, EdgeList red) {
    Game g;
    if (names.size() > static_cast<std::size_t>(kMaxVertices))
      throw Error(ErrorKind::TooManyVertices,
                  std::to_string(names.size()) + " vertices, at most " + std::to_string(kMaxVertices));
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!g.index_.emplace(names[i], static_cast<int>(i)).second)
        throw Error(ErrorKind::DuplicateVertex, names[i]);
    }
    g.names_ = std::move(names);
    const auto universe = VertexSet::prefix(static_cast<int>(g.names_.size()));
    for (auto* edges : {&blue, &red}) {
      for (const auto& e : *edges) {
        if (e.empty()) throw Error(ErrorKind::EmptyEdge, "edge with no vertices");
        if (!e.subset_of(universe))
          throw Error(ErrorKind::UnknownVertex, "edge mentions vertex index outside 0.." +
                                                    std::to_string(g.names_.size()));
      }
      std::sort(edges->begin(), edges->end(), lex_less<2>);
      edges->erase(std::unique(edges->begin(), edges->end()), edges->end());
    }
    g.blue_ = std::move(blue);
    g.red_ = std::move(red);
    return g;
  }

  /// Vertices named v0, v1, ...
  static Game anonymous(int n, EdgeList blue, EdgeList red) {
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    return from_indices(std::move(names), std::move(blue), std::move(red));
  }

  /// Game whose vertex set is board.free, reindexed in increasing order.
  static Game from_board(const Board& b, const std::vector<std::string>& names) {
    std::vector<int> remap(static_cast<std::size_t>(kMaxVertices), -1);
    std::vector<std::string> kept;
    b.free.for_each([&](int v) {
      remap[static_cast<std::size_t>(v)] = static_cast<int>(kept.size());
      kept.push_back(v < static_cast<int>(names.size()) ? names[static_cast<std::size_t>(v)]
                                                        : "v" + std::to_string(v));
    });
    auto translate = [&](const EdgeList& edges) {
      EdgeList out;
      for (const auto& e : edges) {
        VertexSet t;
        e.for_each([&](int v) { t.insert(remap[static_cast<std::size_t>(v)]); });
        out.push_back(t);
      }
      return out;
    };
    return from_indices(std::move(kept), translate(b.blue), translate(b.red));
  }

  int num_vertices() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(int v) const { return names_.at(static_cast<std::size_t>(v)); }

  std::optional<int> index_of(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int require_index(const std::string& name) const {
    if (auto i = index_of(name)) return *i;
    throw Error(ErrorKind::UnknownVertex, name);
  }

  VertexSet vertex_set(const std::vector<std::string>& names) const {
    VertexSet s;
    for (const auto& n : names) s.insert(require_index(n));
    return s;
  }

  const EdgeList& blue_edges() const { return blue_; }
  const EdgeList& red_edges() const { return red_; }
  const EdgeList& edges_of(Player p) const { return p == Player::Left ? blue_ : red_; }

  VertexSet all_vertices() const { return VertexSet::prefix(num_vertices()); }

  Board board() const {
    Board b{all_vertices(), blue_, red_};
    canonicalize(b);
    return b;
  }

  std::vector<std::string> edge_names(const VertexSet& e) const {
    std::vector<std::string> out;
    e.for_each([&](int v) { out.push_back(name(v)); });
    return out;
  }

  Game with_colors_swapped() const { return from_indices(names_, red_, blue_); }

  friend bool operator==(const Game& a, const Game& b) {
    return a.names_ == b.names_ && a.blue_ == b.blue_ && a.red_ == b.red_;
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  EdgeList blue_;
  EdgeList red_;
};

/// Builds and validates a game from vertex names. Vertices mentioned only in
/// edges are rejected; use the .apg parser for implicit declaration.
inline Game new_game(const std::vector<std::string>& vertices,
                     const std::vector<std::vector<std::string>>& blue,
                     const std::vector<std::vector<std::string>>& red) {
  std::unordered_map<std::string, int> index;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (!index.emplace(vertices[i], static_cast<int>(i)).second)
      throw Error(ErrorKind::DuplicateVertex, vertices[i]);
  auto convert = [&](const std::vector<std::vector<std::string>>& edges) {
    EdgeList out;
    for (const auto& e : edges) {
      if (e.empty()) throw Error(ErrorKind::EmptyEdge, "edge with no vertices");
      VertexSet s;
      for (const auto& v : e) {
        auto it = index.find(v);
        if (it == index.end()) throw Error(ErrorKind::UnknownVertex, v);
        s.insert(it->second);
      }
      out.push_back(s);
    }
    return out;
  };
  return Game::from_indices(vertices, convert(blue), convert(red));
}

/// (E^{+plus})^{-minus}: drops every edge meeting `kill`, then removes
/// `shrink` from the survivors. Throws AlreadyWon if a survivor empties.
inline EdgeList updated_edges(const EdgeList& edges, const VertexSet& shrink, const VertexSet& kill) {
  EdgeList out;
  for (const auto& e : edges) {
    if (e.intersects(kill)) continue;
    auto r = e - shrink;
    if (r.empty()) throw AlreadyWonError(std::nullopt, "an edge is filled");
    out.push_back(r);
  }
  return out;
}

/// The updated game after Left picked `left` and Right picked `right`,
/// reindexed on the remaining vertices.
inline Game update(const Game& g, const VertexSet& left, const VertexSet& right) {
  if (left.intersects(right)) throw Error(ErrorKind::InvalidPicks, "a vertex is picked by both players");
  if (!(left | right).subset_of(g.all_vertices()))
    throw Error(ErrorKind::InvalidPicks, "picked vertex outside the game");
  bool left_won = false, right_won = false;
  EdgeList blue, red;
  try {
    blue = updated_edges(g.blue_edges(), left, right);
  } catch (const AlreadyWonError&) {
    left_won = true;
  }
  try {
    red = updated_edges(g.red_edges(), right, left);
  } catch (const AlreadyWonError&) {
    right_won = true;
  }
  if (left_won && right_won) throw Error(ErrorKind::InvalidPicks, "both players filled an edge");
  if (left_won) throw AlreadyWonError(Player::Left, "Left has filled a blue edge");
  if (right_won) throw AlreadyWonError(Player::Right, "Right has filled a red edge");
  Board b{g.all_vertices() - left - right, std::move(blue), std::move(red)};
  return Game::from_board(b, g.names());
}

inline Game update(const Game& g, const std::vector<std::string>& left, const std::vector<std::string>& right) {
  return update(g, g.vertex_set(left), g.vertex_set(right));
}

struct Status {
  enum class Kind { Ongoing, Won, Draw };
  Kind kind = Kind::Ongoing;
  Player winner = Player::Left;  // meaningful only for Won

  static Status ongoing() { return {}; }
  static Status draw() { return {Kind::Draw, Player::Left}; }
  static Status won(Player p) { return {Kind::Won, p}; }

  std::string to_string() const {
    switch (kind) {
      case Kind::Ongoing: return "Ongoing";
      case Kind::Draw: return "Draw";
      case Kind::Won: return std::string("Won(") + apg::to_string(winner) + ")";
    }
    return "?";
  }
  friend bool operator==(const Status&, const Status&) = default;
};

/// A game in progress. Moves are applied one at a time, so the instant an
/// edge is filled the position becomes terminal; simultaneous fills cannot
/// arise.
class Position {
 public:
  static Position start(Game g, Player first) {
    Position p;
    p.game_ = std::move(g);
    p.first_ = first;
    p.to_move_ = first;
    p.board_ = p.game_.board();
    p.refresh_status();
    return p;
  }

  /// Position reached after the given pick sets, with `first` having opened.
  static Position from_picks(Game g, const VertexSet& left, const VertexSet& right, Player first) {
    if (left.intersects(right)) throw Error(ErrorKind::InvalidPicks, "a vertex is picked by both players");
    if (!(left | right).subset_of(g.all_vertices()))
      throw Error(ErrorKind::InvalidPicks, "picked vertex outside the game");
    const int diff = first == Player::Left ? left.size() - right.size() : right.size() - left.size();
    if (diff != 0 && diff != 1) throw Error(ErrorKind::InvalidPicks, "pick counts do not alternate");
    Position p = start(std::move(g), first);
    p.left_ = left;
    p.right_ = right;
    p.to_move_ = diff == 0 ? first : opponent(first);
    bool left_filled = false, right_filled = false;
    for (const auto& e : p.game_.blue_edges()) left_filled |= e.subset_of(left);
    for (const auto& e : p.game_.red_edges()) right_filled |= e.subset_of(right);
    if (left_filled && right_filled) throw Error(ErrorKind::InvalidPicks, "both players filled an edge");
    if (left_filled || right_filled) {
      p.status_ = Status::won(left_filled ? Player::Left : Player::Right);
      return p;
    }
    p.board_ = Board{p.game_.all_vertices() - left - right,
                     updated_edges(p.game_.blue_edges(), left, right),
                     updated_edges(p.game_.red_edges(), right, left)};
    canonicalize(p.board_);
    p.refresh_status();
    return p;
  }

  Position play(int v) const {
    if (status_.kind != Status::Kind::Ongoing) throw Error(ErrorKind::InvalidPicks, "game is over");
    if (!board_.free.contains(v)) throw Error(ErrorKind::InvalidPicks, "vertex already picked");
    Position next = *this;
    (to_move_ == Player::Left ? next.left_ : next.right_).insert(v);
    next.history_.push_back(v);
    if (pick_completes(board_, v, to_move_)) {
      next.status_ = Status::won(to_move_);
      next.board_.free.erase(v);
    } else {
      next.board_ = after_pick(board_, v, to_move_);
      next.refresh_status();
    }
    next.to_move_ = opponent(to_move_);
    return next;
  }

  Position play(const std::string& name) const { return play(game_.require_index(name)); }

  const Game& game() const { return game_; }
  const VertexSet& picked_left() const { return left_; }
  const VertexSet& picked_right() const { return right_; }
  Player to_move() const { return to_move_; }
  Player first_player() const { return first_; }
  const std::vector<int>& history() const { return history_; }
  Status status() const { return status_; }

  /// Updated game in index space of the original game.
  const Board& board() const { return board_; }

  /// Updated game as a standalone Game (only while ongoing).
  Game updated_game() const { return Game::from_board(board_, game_.names()); }

 private:
  void refresh_status() {
    if (board_.free.empty()) status_ = Status::draw();
    else status_ = Status::ongoing();
  }

  Game game_;
  VertexSet left_, right_;
  Player first_ = Player::Left;
  Player to_move_ = Player::Left;
  Status status_;
  Board board_;
  std::vector<int> history_;
};

inline Status status(const Position& p) { return p.status(); }

struct UnionResult {
  Game game;
  /// (original name in the second game, name used in the union)
  std::vector<std::pair<std::string, std::string>> renames;
};

/// (V ∪ V', E_L ∪ E'_L, E_R ∪ E'_R). Colliding names from the second game
/// get a "#2" (then "#3", ...) suffix.
inline UnionResult disjoint_union(const Game& a, const Game& b) {
  const int n = a.num_vertices();
  if (n + b.num_vertices() > kMaxVertices)
    throw Error(ErrorKind::TooManyVertices, "union exceeds " + std::to_string(kMaxVertices) + " vertices");
  UnionResult r;
  std::vector<std::string> names = a.names();
  std::unordered_map<std::string, int> taken;
  for (const auto& s : names) taken.emplace(s, 0);
  for (const auto& s : b.names()) taken.emplace(s, 0);
  std::unordered_map<std::string, int> in_a;
  for (const auto& s : a.names()) in_a.emplace(s, 0);
  for (const auto& s : b.names()) {
    if (!in_a.count(s)) {
      names.push_back(s);
      continue;
    }
    std::string renamed;
    for (int k = 2;; ++k) {
      renamed = s + "#" + std::to_string(k);
      if (!taken.count(renamed)) break;
    }
    taken.emplace(renamed, 0);
    names.push_back(renamed);
    r.renames.emplace_back(s, renamed);
  }
  auto shift = [n](const EdgeList& edges) {
    EdgeList out;
    for (const auto& e : edges) {
      VertexSet t;
      e.for_each([&](int v) { t.insert(v + n); });
      out.push_back(t);
    }
    return out;
  };
  EdgeList blue = a.blue_edges(), red = a.red_edges();
  for (const auto& e : shift(b.blue_edges())) blue.push_back(e);
  for (const auto& e : shift(b.red_edges())) red.push_back(e);
  r.game = Game::from_indices(std::move(names), std::move(blue), std::move(red));
  return r;
}

}  // namespace apg
