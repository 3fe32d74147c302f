#pragma once

#include <array>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "apg/error.hpp"

namespace apg {

enum class Player { Left, Right };

constexpr Player opponent(Player p) { return p == Player::Left ? Player::Right : Player::Left; }

inline const char* to_string(Player p) { return p == Player::Left ? "Left" : "Right"; }

/// Result of optimal play for a fixed first player. Ordered from Left's
/// point of view: RightWin < Draw < LeftWin.
enum class GameResult : int { RightWin = -1, Draw = 0, LeftWin = 1 };

inline const char* to_string(GameResult r) {
  switch (r) {
    case GameResult::LeftWin: return "LeftWin";
    case GameResult::Draw: return "Draw";
    case GameResult::RightWin: return "RightWin";
  }
  return "?";
}

constexpr int left_score(GameResult r) { return static_cast<int>(r); }

/// Score from the point of view of `p` (+1 win, 0 draw, -1 loss).
constexpr int score_for(GameResult r, Player p) {
  return p == Player::Left ? static_cast<int>(r) : -static_cast<int>(r);
}

constexpr GameResult result_from_score(int score_for_p, Player p) {
  const int left = p == Player::Left ? score_for_p : -score_for_p;
  return static_cast<GameResult>(left);
}

constexpr GameResult win_for(Player p) {
  return p == Player::Left ? GameResult::LeftWin : GameResult::RightWin;
}

/// Result with the colors exchanged.
constexpr GameResult mirror(GameResult r) { return static_cast<GameResult>(-static_cast<int>(r)); }

/// The six realisable outcomes. Only legal (Left-starts, Right-starts) pairs
/// can be represented; the three pairs where moving second is strictly
/// better than moving first are rejected at construction.
class Outcome {
 public:
  enum class Kind { L, Lminus, N, D, Rminus, R };

  constexpr Outcome(Kind k) : kind_(k) {}  // NOLINT(google-explicit-constructor)

  static Outcome from_results(GameResult left_starts, GameResult right_starts) {
    if (auto k = kind_of(left_starts, right_starts)) return Outcome(*k);
    throw Error(ErrorKind::IllegalOutcome, std::string("Left starts: ") + to_string(left_starts) +
                                               ", Right starts: " + to_string(right_starts));
  }

  static std::optional<Kind> kind_of(GameResult left_starts, GameResult right_starts) {
    using GR = GameResult;
    if (left_starts == GR::LeftWin && right_starts == GR::LeftWin) return Kind::L;
    if (left_starts == GR::LeftWin && right_starts == GR::Draw) return Kind::Lminus;
    if (left_starts == GR::LeftWin && right_starts == GR::RightWin) return Kind::N;
    if (left_starts == GR::Draw && right_starts == GR::Draw) return Kind::D;
    if (left_starts == GR::Draw && right_starts == GR::RightWin) return Kind::Rminus;
    if (left_starts == GR::RightWin && right_starts == GR::RightWin) return Kind::R;
    return std::nullopt;
  }

  static std::optional<Outcome> parse(std::string_view s) {
    for (Kind k : all_kinds())
      if (s == Outcome(k).name()) return Outcome(k);
    if (s == "Lminus" || s == "L-") return Outcome(Kind::Lminus);
    if (s == "Rminus" || s == "R-") return Outcome(Kind::Rminus);
    return std::nullopt;
  }

  static constexpr std::array<Kind, 6> all_kinds() {
    return {Kind::L, Kind::Lminus, Kind::N, Kind::D, Kind::Rminus, Kind::R};
  }

  constexpr Kind kind() const { return kind_; }

  constexpr GameResult when_left_starts() const {
    switch (kind_) {
      case Kind::L:
      case Kind::Lminus:
      case Kind::N: return GameResult::LeftWin;
      case Kind::D:
      case Kind::Rminus: return GameResult::Draw;
      case Kind::R: return GameResult::RightWin;
    }
    return GameResult::Draw;
  }

  constexpr GameResult when_right_starts() const {
    switch (kind_) {
      case Kind::L: return GameResult::LeftWin;
      case Kind::Lminus:
      case Kind::D: return GameResult::Draw;
      case Kind::N:
      case Kind::Rminus:
      case Kind::R: return GameResult::RightWin;
    }
    return GameResult::Draw;
  }

  constexpr GameResult when_starts(Player p) const {
    return p == Player::Left ? when_left_starts() : when_right_starts();
  }

  /// Outcome of the color-swapped game.
  Outcome mirrored() const {
    return from_results(mirror(when_right_starts()), mirror(when_left_starts()));
  }

  const char* name() const {
    switch (kind_) {
      case Kind::L: return "L";
      case Kind::Lminus: return "L-";
      case Kind::N: return "N";
      case Kind::D: return "D";
      case Kind::Rminus: return "R-";
      case Kind::R: return "R";
    }
    return "?";
  }

  constexpr int index() const { return static_cast<int>(kind_); }

  friend constexpr bool operator==(Outcome a, Outcome b) { return a.kind_ == b.kind_; }

 private:
  Kind kind_;
};

inline std::ostream& operator<<(std::ostream& os, Outcome o) { return os << o.name(); }
inline std::ostream& operator<<(std::ostream& os, GameResult r) { return os << to_string(r); }
inline std::ostream& operator<<(std::ostream& os, Player p) { return os << to_string(p); }

/// Componentwise order from Left's point of view. D and N are incomparable.
constexpr bool leq_L(Outcome a, Outcome b) {
  return left_score(a.when_left_starts()) <= left_score(b.when_left_starts()) &&
         left_score(a.when_right_starts()) <= left_score(b.when_right_starts());
}

}  // namespace apg
