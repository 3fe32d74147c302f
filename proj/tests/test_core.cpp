#include <gtest/gtest.h>

#include "apg/apg.hpp"

using namespace apg;

namespace {

Game bfly() { return butterfly(Player::Left); }

EdgeList named_edges(const Game& g, const std::vector<std::vector<std::string>>& edges) {
  EdgeList out;
  for (const auto& e : edges) out.push_back(g.vertex_set(e));
  return out;
}

}  // namespace

TEST(VertexSet, BasicOps) {
  VertexSet s{1, 5, 70};
  EXPECT_EQ(s.size(), 3);
  EXPECT_TRUE(s.contains(70));
  EXPECT_EQ(s.front(), 1);
  EXPECT_EQ(s.next(5), 70);
  EXPECT_EQ(s.next(70), -1);
  s.erase(5);
  EXPECT_FALSE(s.contains(5));
  EXPECT_TRUE(VertexSet{1}.subset_of(s));
  EXPECT_TRUE(s.intersects(VertexSet{70, 3}));
  EXPECT_EQ(VertexSet::prefix(3), (VertexSet{0, 1, 2}));
  EXPECT_EQ(VertexSet::prefix(128).size(), 128);
}

TEST(Game, Construction) {
  const Game g = new_game({"a"}, {{"a"}}, {});
  EXPECT_EQ(g.num_vertices(), 1);
  EXPECT_EQ(g.blue_edges().size(), 1U);

  const Game b = bfly();
  EXPECT_EQ(b.num_vertices(), 7);
  EXPECT_EQ(b.blue_edges().size(), 4U);
  EXPECT_TRUE(b.red_edges().empty());

  try {
    new_game({"a"}, {{}}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyEdge);
  }
  try {
    new_game({"a", "a"}, {}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DuplicateVertex);
  }
  try {
    new_game({"a"}, {{"b"}}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownVertex);
  }
  std::vector<std::string> many;
  for (int i = 0; i <= kMaxVertices; ++i) many.push_back("v" + std::to_string(i));
  try {
    new_game(many, {}, {});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooManyVertices);
  }
}

TEST(Game, DuplicateEdgesCollapse) {
  const Game g = new_game({"a", "b"}, {{"a", "b"}, {"b", "a"}}, {});
  EXPECT_EQ(g.blue_edges().size(), 1U);
}

TEST(Update, EdgeArithmetic) {
  const Game b = bfly();
  const auto alpha = b.vertex_set({"alpha"});
  const auto after = updated_edges(b.blue_edges(), alpha, {});
  Game expect = Game::from_indices(b.names(),
                                   named_edges(b, {{"beta1", "gamma1"}, {"beta1", "gamma2"}, {"beta2", "gamma3"},
                                                   {"beta2", "gamma4"}}),
                                   {});
  EXPECT_EQ(Game::from_indices(b.names(), after, {}), expect);

  const auto after2 = updated_edges(after, {}, b.vertex_set({"beta1"}));
  expect = Game::from_indices(b.names(), named_edges(b, {{"beta2", "gamma3"}, {"beta2", "gamma4"}}), {});
  EXPECT_EQ(Game::from_indices(b.names(), after2, {}), expect);

  EXPECT_EQ(updated_edges(b.blue_edges(), {}, {}), b.blue_edges());
}

TEST(Update, ButterflyLine) {
  const Game b = bfly();
  const Game g = update(b, std::vector<std::string>{"alpha", "beta2"}, std::vector<std::string>{"beta1", "gamma3"});
  EXPECT_EQ(g.names(), (std::vector<std::string>{"gamma1", "gamma2", "gamma4"}));
  ASSERT_EQ(g.blue_edges().size(), 1U);
  EXPECT_EQ(g.edge_names(g.blue_edges()[0]), std::vector<std::string>{"gamma4"});
  EXPECT_TRUE(g.red_edges().empty());

  try {
    update(b, std::vector<std::string>{"alpha", "beta2", "gamma4"}, std::vector<std::string>{"beta1", "gamma3"});
    FAIL();
  } catch (const AlreadyWonError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::AlreadyWon);
    EXPECT_EQ(e.winner(), Player::Left);
  }
  EXPECT_EQ(update(b, VertexSet{}, VertexSet{}), b);
  EXPECT_THROW(update(b, VertexSet{0}, VertexSet{0}), Error);
}

TEST(Update, Composition) {
  Rng rng(7);
  RandomGameSpec spec;
  spec.min_vertices = 3;
  spec.max_vertices = 7;
  spec.min_edge_size = 2;
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    const Game g = random_game(rng, spec);
    const int n = g.num_vertices();
    VertexSet s1, t1, s2, t2;
    for (int v = 0; v < n; ++v) {
      switch (rng.uniform(0, 4)) {
        case 0: s1.insert(v); break;
        case 1: t1.insert(v); break;
        case 2: s2.insert(v); break;
        case 3: t2.insert(v); break;
        default: break;
      }
    }
    try {
      const Game once = update(g, s1 | s2, t1 | t2);
      const Game first = update(g, s1, t1);
      // Re-express the second pick sets in the renumbered game.
      auto remap = [&](const VertexSet& s) {
        std::vector<std::string> names;
        s.for_each([&](int v) { names.push_back(g.name(v)); });
        return first.vertex_set(names);
      };
      EXPECT_EQ(update(first, remap(s2), remap(t2)), once);
      ++checked;
    } catch (const AlreadyWonError&) {
    } catch (const Error& e) {
      ASSERT_EQ(e.kind(), ErrorKind::InvalidPicks) << e.what();
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Position, Status) {
  EXPECT_EQ(Position::start(Game{}, Player::Left).status(), Status::draw());
  const Game unit = new_game({"a"}, {{"a"}}, {});
  EXPECT_EQ(Position::start(unit, Player::Left).play("a").status(), Status::won(Player::Left));

  Position p = Position::start(bfly(), Player::Left);
  for (const char* v : {"alpha", "beta1", "beta2", "gamma3", "gamma4"}) p = p.play(v);
  EXPECT_EQ(p.status(), Status::won(Player::Left));
  EXPECT_THROW(p.play("gamma1"), Error);
}

TEST(Union, Counts) {
  const Game b = bfly();
  EXPECT_EQ(disjoint_union(b, Game{}).game, b);
  const auto bb = disjoint_union(b, b);
  EXPECT_EQ(bb.game.num_vertices(), 14);
  EXPECT_EQ(bb.game.blue_edges().size(), 8U);
  EXPECT_EQ(disjoint_union(w_k(2, Player::Left), w_k(3, Player::Right)).game.num_vertices(), 8);
}

TEST(Outcome, Order) {
  using K = Outcome::Kind;
  EXPECT_TRUE(leq_L(K::R, K::L));
  EXPECT_FALSE(leq_L(K::N, K::D));
  EXPECT_FALSE(leq_L(K::D, K::N));
  EXPECT_TRUE(leq_L(K::Lminus, K::L));
  EXPECT_THROW(Outcome::from_results(GameResult::Draw, GameResult::LeftWin), Error);
  EXPECT_EQ(Outcome(K::Lminus).mirrored(), Outcome(K::Rminus));
  EXPECT_EQ(Outcome::parse("L-"), Outcome(K::Lminus));
}

TEST(Twins, Examples) {
  // Isolated c, d are twins and leave together.
  const Game g1 = new_game({"a", "b", "c", "d"}, {{"a", "b"}}, {});
  const auto r1 = twin_reduce(g1);
  EXPECT_FALSE(r1.game.index_of("c") || r1.game.index_of("d"));
  EXPECT_EQ(outcome(r1.game), outcome(g1));

  // a, b share both edges; Right's twin pick kills them, then x, y leave.
  const Game g2 = new_game({"a", "b", "x", "y"}, {{"a", "b", "x"}, {"a", "b", "y"}}, {});
  const auto r2 = twin_reduce(g2);
  EXPECT_EQ(r2.game.num_vertices(), 0);
  EXPECT_EQ(outcome(r2.game), outcome(g2));

  // A single blue pair: D before and after.
  const Game g3 = new_game({"u", "v"}, {{"u", "v"}}, {});
  const auto r3 = twin_reduce(g3);
  EXPECT_EQ(r3.game.num_vertices(), 0);
  EXPECT_EQ(outcome(g3), Outcome(Outcome::Kind::D));
  EXPECT_EQ(outcome(r3.game), outcome(g3));

  // One leftover isolated vertex stays (move parity).
  const Game g4 = new_game({"a", "b", "c"}, {{"a", "b"}}, {});
  EXPECT_EQ(twin_reduce(g4).game.num_vertices(), 1);
}

TEST(Dominance, Examples) {
  const Game g1 = new_game({"a", "b", "c"}, {{"a", "b"}}, {});
  EXPECT_TRUE(dominated_moves(g1, Player::Left).contains(2));
  const Game g2 = new_game({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}}, {});
  const auto d2 = dominated_moves(g2, Player::Left);
  EXPECT_TRUE(d2.contains(1));
  EXPECT_TRUE(d2.contains(2));
  EXPECT_FALSE(d2.contains(0));
  const auto gb = update(g2, VertexSet{1}, {}), ga = update(g2, VertexSet{0}, {});
  EXPECT_TRUE(leq_L(outcome(gb), outcome(ga)));
}

TEST(Greedy, Examples) {
  const Game g1 = new_game({"u", "v"}, {{"u", "v"}}, {});
  const auto m1 = greedy_moves(g1, Player::Left);
  EXPECT_NE(std::find(m1.begin(), m1.end(), GreedyMove{1, 0}), m1.end());

  const Game g2 = new_game({"u", "v", "w"}, {{"u", "v"}}, {{"u", "w"}});
  const auto m2 = greedy_moves(g2, Player::Left);
  EXPECT_EQ(std::find(m2.begin(), m2.end(), GreedyMove{1, 0}), m2.end());
}

TEST(Pairing, Examples) {
  const Game g1 = new_game({"a", "b"}, {{"a", "b"}}, {});
  EXPECT_TRUE(check_pairing(g1, Pairing({{0, 1}}), Player::Right));
  const Game g2 = new_game({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}, {});
  EXPECT_FALSE(check_pairing(g2, Pairing({{0, 1}}), Player::Right));
  const Game g3 = Game::anonymous(6, {{0, 1}, {2, 3}, {4, 5}}, {});
  EXPECT_TRUE(check_pairing(g3, Pairing({{0, 1}, {2, 3}, {4, 5}}), Player::Right));
  EXPECT_THROW(Pairing({{0, 1}, {1, 2}}), Error);
}

TEST(Supersets, Pruning) {
  const Game g = new_game({"a", "b", "c"}, {{"a"}, {"a", "b"}, {"b", "c"}}, {{"c"}, {"a", "c"}});
  const auto n = normalize_supersets(g);
  EXPECT_EQ(n.game.blue_edges().size(), 2U);
  EXPECT_EQ(n.game.red_edges().size(), 1U);
  EXPECT_EQ(n.removed_blue.size(), 1U);
  EXPECT_EQ(outcome(n.game), outcome(g));
}

TEST(Transversals, Examples) {
  const Hypergraph h1 = Hypergraph::anonymous(2, {{0, 1}});
  EXPECT_EQ(minimal_transversals(h1), (EdgeList{{0}, {1}}));
  const Hypergraph h2 = Hypergraph::anonymous(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(minimal_transversals(h2), (EdgeList{{0, 2}, {1}}));
  EXPECT_EQ(minimal_transversals(Hypergraph::anonymous(3, {})), (EdgeList{VertexSet{}}));
  EXPECT_THROW(minimal_transversals(Hypergraph::anonymous(30, {{0}}), 22), Error);
}

TEST(Transversals, Embeddings) {
  const Hypergraph h = Hypergraph::anonymous(1, {{0}});
  EXPECT_EQ(outcome(embed_maker_breaker(h, EmbedMode::EmptyRed)), Outcome(Outcome::Kind::Lminus));
  EXPECT_EQ(outcome(embed_maker_breaker(h, EmbedMode::TransversalRed)), Outcome(Outcome::Kind::N));
  try {
    embed_maker_breaker(Hypergraph::anonymous(2, {}), EmbedMode::TransversalRed);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EdgelessHypergraph);
  }
}

TEST(Batteries, TransversalEmbeddingSmall) {
  const Report r = verify_transversal_embedding(3);
  EXPECT_TRUE(r.ok()) << r.to_text();
}

TEST(Batteries, OutcomeLegalitySmall) {
  const Report r = verify_outcome_legality(3, 500, 3);
  EXPECT_TRUE(r.ok()) << r.to_text();
}
