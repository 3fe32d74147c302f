#include <gtest/gtest.h>

#include <cstdlib>

#include "apg/apg.hpp"

using namespace apg;

TEST(Solve, Butterfly) {
  const Game b = butterfly();
  EXPECT_EQ(solve(b, Player::Left), GameResult::LeftWin);
  EXPECT_EQ(solve(b, Player::Right), GameResult::Draw);
  EXPECT_EQ(outcome(b), Outcome(Outcome::Kind::Lminus));
}

TEST(Solve, Trivial) {
  const Game shared = new_game({"a"}, {{"a"}}, {{"a"}});
  EXPECT_EQ(solve(shared, Player::Left), GameResult::LeftWin);
  EXPECT_EQ(solve(shared, Player::Right), GameResult::RightWin);
  EXPECT_EQ(outcome(Game{}), Outcome(Outcome::Kind::D));
  EXPECT_EQ(outcome(new_game({"a", "b"}, {{"a"}, {"b"}}, {})), Outcome(Outcome::Kind::L));
}

TEST(BestMove, Examples) {
  const Game b = butterfly();
  auto [v, r] = best_move(Position::start(b, Player::Left));
  EXPECT_EQ(b.name(v), "alpha");
  EXPECT_EQ(r, GameResult::LeftWin);

  const Game unit = new_game({"a"}, {{"a"}}, {});
  EXPECT_EQ(best_move(Position::start(unit, Player::Left)), std::make_pair(0, GameResult::LeftWin));

  const Game p3 = new_game({"u", "v", "w"}, {}, {{"u", "v"}, {"v", "w"}});
  auto [c, rr] = best_move(Position::start(p3, Player::Right));
  EXPECT_EQ(p3.name(c), "v");
  EXPECT_EQ(rr, GameResult::RightWin);
}

TEST(SelfPlay, ButterflyLine) {
  const auto t = self_play(butterfly(), Player::Left);
  ASSERT_EQ(t.steps.size(), 5U);
  EXPECT_EQ(t.steps[0].vertex_name, "alpha");
  EXPECT_EQ(t.moves_by(Player::Left), 3);
  EXPECT_EQ(t.final_status, Status::won(Player::Left));
  EXPECT_EQ(t.value, GameResult::LeftWin);
  EXPECT_EQ(t.steps[4].tag, MoveTag::Winning);
}

TEST(SelfPlay, EmptyAndW3) {
  const auto e = self_play(Game{}, Player::Left);
  EXPECT_TRUE(e.steps.empty());
  EXPECT_EQ(e.final_status, Status::draw());

  const auto t = self_play(w_k(3, Player::Left), Player::Left);
  EXPECT_EQ(t.final_status, Status::won(Player::Left));
  EXPECT_EQ(t.moves_by(Player::Left), 3);
}

TEST(Delay, Examples) {
  EXPECT_EQ(delay(new_game({"a"}, {{"a"}}, {}), Player::Left), Delay::finite(0));
  EXPECT_EQ(delay(butterfly(), Player::Left), Delay::finite(2));
  for (int k = 1; k <= 5; ++k) EXPECT_EQ(delay(w_k(k, Player::Left), Player::Left), Delay::finite(k - 1)) << k;
  for (int k = 1; k <= 4; ++k) EXPECT_EQ(delay(w_k(k, Player::Right), Player::Right), Delay::finite(k - 1)) << k;
  EXPECT_TRUE(delay(Game::anonymous(2, {}, {}), Player::Left).is_infinite());
  EXPECT_TRUE(delay(new_game({"a"}, {}, {{"a"}}), Player::Left).is_infinite());
  EXPECT_TRUE(Delay::finite(3) < Delay::infinite());
  EXPECT_EQ(Delay::infinite().to_string(), "inf");
}

TEST(Solver, PruningMatchesPlainSearch) {
  Rng rng(11);
  RandomGameSpec spec;
  spec.max_vertices = 8;
  Solver fast;
  Solver plain(SolverOptions::no_pruning());
  for (int i = 0; i < 1500; ++i) {
    RandomGameSpec s = spec;
    s.min_edge_size = 1 + i % 3;
    const Game g = random_game(rng, s);
    for (Player p : {Player::Left, Player::Right}) ASSERT_EQ(fast.solve(g, p), plain.solve(g, p)) << to_apg(g);
  }
}

TEST(Solver, BruteForceAgreement) {
  // Plain minimax without memo or pruning on tiny games.
  auto brute = [](auto&& self, const Board& b, Player mover) -> int {
    int best = -1;
    for (int v = b.free.front(); v >= 0; v = b.free.next(v)) {
      if (pick_completes(b, v, mover)) return 1;
      const Board c = after_pick(b, v, mover);
      best = std::max(best, c.free.empty() ? 0 : -self(self, c, opponent(mover)));
      if (best == 1) break;
    }
    return b.free.empty() ? 0 : best;
  };
  Rng rng(5);
  RandomGameSpec spec;
  spec.max_vertices = 6;
  Solver s;
  for (int i = 0; i < 600; ++i) {
    const Game g = random_game(rng, spec);
    for (Player p : {Player::Left, Player::Right})
      ASSERT_EQ(s.value(g.board(), p), brute(brute, g.board(), p)) << to_apg(g);
  }
}

TEST(Solver, NodeLimit) {
  SolverOptions o;
  o.node_limit = 10;
  Solver s(o);
  try {
    s.solve(sat_to_23(all_sign_patterns()).game, Player::Left);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ResourceLimit);
  }
  ::setenv("APG_NODE_LIMIT", "1234", 1);
  EXPECT_EQ(default_node_limit(), 1234U);
  ::unsetenv("APG_NODE_LIMIT");
  EXPECT_EQ(default_node_limit(), kDefaultNodeLimit);
}

TEST(Solver, StatsText) {
  Solver s;
  s.solve(butterfly(), Player::Right);
  EXPECT_GT(s.stats().nodes_expanded, 0U);
  EXPECT_NE(s.stats().to_text().find("nodes_expanded: "), std::string::npos);
}

TEST(Batteries, LemmasSmall) {
  const Report r = verify_lemmas(3, 150);
  EXPECT_TRUE(r.ok()) << r.to_text();
}

TEST(Batteries, UnionAndDelaySmall) {
  const Report u = verify_union(3, 300);
  EXPECT_TRUE(u.ok()) << u.to_text();
  const Report d = verify_delay(3, 80, 4);
  EXPECT_TRUE(d.ok()) << d.to_text();
}

TEST(Batteries, Deterministic) {
  EXPECT_EQ(verify_lemmas(9, 40).to_text(), verify_lemmas(9, 40).to_text());
  EXPECT_NE(verify_union(9, 50).to_text(), std::string());
}
