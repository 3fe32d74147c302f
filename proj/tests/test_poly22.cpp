#include <gtest/gtest.h>

#include "apg/apg.hpp"

using namespace apg;

namespace {

Graph2 graph(const Game& g) { return Graph2::from_board(g.board()); }

}  // namespace

TEST(Preprocess, Units) {
  auto p = preprocess_units(new_game({"a"}, {{"a"}}, {}).board(), Player::Left);
  ASSERT_TRUE(p.decided);
  EXPECT_EQ(*p.decided, GameResult::LeftWin);

  p = preprocess_units(new_game({"a", "b"}, {}, {{"a"}, {"b"}}).board(), Player::Left);
  ASSERT_TRUE(p.decided);
  EXPECT_EQ(*p.decided, GameResult::RightWin);

  const Game g = new_game({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {{"a"}});
  p = preprocess_units(g.board(), Player::Left);
  ASSERT_FALSE(p.forced.empty());
  EXPECT_EQ(p.forced[0], 0);
  for (Player first : {Player::Left, Player::Right}) EXPECT_EQ(solve22(g, first), solve(g, first));
}

TEST(LeftToMove, Rule) {
  EXPECT_TRUE(left_to_move_rule(graph(new_game({"u", "v", "w"}, {{"u", "v"}, {"v", "w"}}, {}))));
  EXPECT_FALSE(left_to_move_rule(graph(Game::anonymous(4, {{0, 1}, {2, 3}}, {}))));
  EXPECT_FALSE(left_to_move_rule(graph(Game::anonymous(3, {}, {}))));
}

TEST(Classify, Types) {
  const Game iso = Game::anonymous(1, {}, {});
  const auto t0 = classify(graph(iso), 0);
  EXPECT_EQ(t0.kind, VertexType::Kind::Type2);
  EXPECT_EQ(t0.path, std::vector<int>{0});

  // red {u,v}; v has blue neighbours a, b off the path.
  const Game g1 = new_game({"u", "v", "a", "b"}, {{"v", "a"}, {"v", "b"}}, {{"u", "v"}});
  EXPECT_EQ(classify(graph(g1), 0).kind, VertexType::Kind::Type1);

  const Game g2 = new_game({"u", "v"}, {}, {{"u", "v"}});
  const auto t2 = classify(graph(g2), 0);
  EXPECT_EQ(t2.kind, VertexType::Kind::Type3);
  EXPECT_EQ(t2.path, (std::vector<int>{0, 1}));
}

TEST(ReduceType3, Examples) {
  const Game g = new_game({"u", "v"}, {}, {{"u", "v"}});
  const Graph2 r = reduce_type3(graph(g), {0, 1});
  EXPECT_TRUE(r.vertices.empty());

  // Chain u -r- v -b- w -r- x: a four-vertex type-3 path from u.
  const Game chain = new_game({"u", "v", "w", "x"}, {{"v", "w"}}, {{"u", "v"}, {"w", "x"}});
  const auto t = classify(graph(chain), 0);
  ASSERT_EQ(t.kind, VertexType::Kind::Type3);
  EXPECT_EQ(t.path.size(), 4U);
  EXPECT_TRUE(reduce_type3(graph(chain), t.path).vertices.empty());
  EXPECT_EQ(solve(chain, Player::Right), solve22(chain, Player::Right));

  EXPECT_THROW(reduce_type3(graph(chain), {0, 1, 2}), Error);
  EXPECT_THROW(reduce_type3(graph(chain), {0, 1}), Error);  // blue {v,w} would survive with w picked by nobody
}

TEST(RightToMove, Rule) {
  EXPECT_FALSE(right_to_move_rule(graph(new_game({"u", "v", "w"}, {{"u", "v"}, {"v", "w"}}, {}))));
  EXPECT_TRUE(right_to_move_rule(graph(Game::anonymous(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}, {}))));
  EXPECT_FALSE(right_to_move_rule(graph(Game::anonymous(3, {}, {{0, 1}, {1, 2}}))));
}

TEST(Solve22, Examples) {
  const Game p3 = new_game({"u", "v", "w"}, {{"u", "v"}, {"v", "w"}}, {});
  EXPECT_EQ(solve22(p3, Player::Left), GameResult::LeftWin);
  const Game m = new_game({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}, {{"a", "c"}, {"b", "d"}});
  EXPECT_EQ(solve22(m, Player::Left), GameResult::Draw);
  EXPECT_EQ(solve22(m, Player::Right), GameResult::Draw);
  const Game rp3 = new_game({"u", "v", "w"}, {}, {{"u", "v"}, {"v", "w"}});
  EXPECT_EQ(solve22(rp3, Player::Left), GameResult::Draw);
  EXPECT_EQ(solve22(rp3, Player::Right), GameResult::RightWin);
  EXPECT_EQ(outcome22(Game::anonymous(3, {}, {})), Outcome(Outcome::Kind::D));
  try {
    solve22(butterfly(), Player::Left);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EdgeTooLarge);
  }
}

TEST(Solve22, OracleSmall) {
  const Report r = verify_poly22(4, 2000, 3, 0, 12);
  EXPECT_TRUE(r.ok()) << r.to_text();
}

TEST(Solve22, LargeRandomAgainstSearch) {
  Rng rng(21);
  Solver s;
  for (int i = 0; i < 300; ++i) {
    RandomGameSpec spec;
    spec.min_vertices = 10;
    spec.max_vertices = 14;
    spec.min_edge_size = 2;
    spec.max_edge_size = 2;
    spec.max_blue = spec.max_red = 16;
    const Game g = random_game(rng, spec);
    for (Player p : {Player::Left, Player::Right}) ASSERT_EQ(solve22(g, p), s.solve(g, p)) << to_apg(g);
  }
}
