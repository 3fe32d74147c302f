#include <gtest/gtest.h>

#include <set>

#include "apg/apg.hpp"

using namespace apg;

namespace {

const CnfFormula kXYZ{3, {{1, 2, 3}}};

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::Usage;
}

}  // namespace

TEST(Dimacs, Parse) {
  const auto f = parse_dimacs_string("c hello\np cnf 3 2\n1 -2 3 0\n-1\n 2 3 0\n");
  EXPECT_EQ(f.num_vars, 3);
  EXPECT_EQ(f.clauses, (std::vector<std::vector<int>>{{1, -2, 3}, {-1, 2, 3}}));
  EXPECT_EQ(parse_dimacs_string(to_dimacs(f)), f);
  EXPECT_EQ(parse_dimacs_string("p cnf 1 1\n1 1 1 0\n%\n0\n").clauses.size(), 1U);
}

TEST(Dimacs, Errors) {
  try {
    parse_dimacs_string("p cnf 3 1\n1 2 0\n", "f.cnf");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BadClauseSize);
    EXPECT_NE(std::string(e.what()).find("f.cnf:2:"), std::string::npos) << e.what();
  }
  EXPECT_EQ(kind_of([] { parse_dimacs_string("1 2 3 0\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_dimacs_string("p cnf 2 1\n1 2 5 0\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_dimacs_string("p cnf 3 2\n1 2 3 0\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_dimacs_string("p cnf 3 1\n1 2 x 0\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { parse_dimacs_string("p cnf 3 1\n1 2 3\n"); }), ErrorKind::Parse);
  EXPECT_EQ(kind_of([] { validate(QbfFormula{3, {{1, 2, 3}}}); }), ErrorKind::OddVarCount);
}

TEST(Oracles, Sat) {
  EXPECT_TRUE(sat_brute(kXYZ));
  EXPECT_FALSE(sat_brute(all_sign_patterns()));
  EXPECT_EQ(qbf_brute(QbfFormula{2, {{1, 1, 1}}}), QbfWinner::Satisfier);
  EXPECT_EQ(qbf_brute(QbfFormula{2, {{1, 1, 1}, {-1, -1, -1}}}), QbfWinner::Falsifier);
  EXPECT_EQ(qbf_brute(QbfFormula{2, {{2, 2, 2}}}), QbfWinner::Falsifier);
  EXPECT_EQ(qbf_brute(QbfFormula{2, {{1, 2, 2}, {1, -2, -2}}}), QbfWinner::Satisfier);
}

TEST(Sat23, Shape) {
  const auto r = sat_to_23(kXYZ);
  EXPECT_EQ(r.game.num_vertices(), 15);
  EXPECT_LE(max_edge_size(r.game.blue_edges()), 3);
  EXPECT_LE(max_edge_size(r.game.red_edges()), 2);
  EXPECT_NE(solve(r.game, Player::Left), GameResult::RightWin);
  EXPECT_EQ(solve(r.game, Player::Left), GameResult::Draw);

  const auto two_clause = sat_to_23(CnfFormula{4, {{-1, 2, 3}, {-2, 3, 4}}});
  EXPECT_EQ(two_clause.game.num_vertices(), 23);

  std::set<std::string> seen;
  for (const auto& [sym, v] : r.provenance) EXPECT_TRUE(seen.insert(v).second) << v;
  EXPECT_EQ(seen.size(), 15U);
}

TEST(Sat23, Canonical) {
  EXPECT_EQ(solve_vs_canonical_right(sat_to_23(kXYZ).game), CanonicalResult::LeftNonLosing);
  EXPECT_EQ(solve_vs_canonical_right(sat_to_23(all_sign_patterns()).game), CanonicalResult::RightWins);
  EXPECT_EQ(solve_vs_canonical_right(new_game({"a", "b"}, {}, {{"a", "b"}})), CanonicalResult::LeftNonLosing);

  const Game g = sat_to_23(kXYZ).game;
  const Board after_x = after_pick(g.board(), g.require_index("x1"), Player::Left);
  EXPECT_EQ(g.name(canonical_right_strategy(after_x)), "nx1");
  EXPECT_EQ(canonical_right_strategy(new_game({"a", "b"}, {{"b"}}, {{"a"}}).board()), 0);
}

TEST(Sat32, Shape) {
  const auto r = sat_to_32(kXYZ);
  EXPECT_EQ(r.game.num_vertices(), 29);
  EXPECT_EQ(solve(r.game, Player::Left), GameResult::LeftWin);
  EXPECT_EQ(solve(sat_to_32(all_sign_patterns()).game, Player::Left), GameResult::RightWin);
}

TEST(Qbf33, Shape) {
  const auto r = qbf_to_33(QbfFormula{2, {{1, 1, 2}}});
  EXPECT_EQ(r.game.num_vertices(), 23);
  EXPECT_LE(max_edge_size(r.game.blue_edges()), 3);
  EXPECT_LE(max_edge_size(r.game.red_edges()), 3);
  EXPECT_NE(solve(r.game, Player::Right), GameResult::LeftWin);

  const auto f = qbf_to_33(QbfFormula{2, {{1, 1, 1}, {-1, -1, -1}}});
  EXPECT_EQ(solve(f.game, Player::Right), GameResult::LeftWin);
}

TEST(Qbf33, Tautologies) {
  const QbfFormula q{2, {{2, 2, -2}}};
  const auto r = qbf_to_33(q);
  ASSERT_EQ(r.notes.size(), 1U);
  EXPECT_NE(r.provenance_text().find("# clause 0"), std::string::npos);
  EXPECT_EQ(qbf_brute(q), QbfWinner::Satisfier);
  EXPECT_NE(solve(r.game, Player::Right), GameResult::LeftWin);
  // The literal build hands Left a tempo.
  EXPECT_EQ(solve(qbf_to_33(q, true).game, Player::Right), GameResult::LeftWin);
}

TEST(Qbf33, ForcedScript) {
  const auto r = qbf_to_33(QbfFormula{2, {{1, 2, 2}, {-1, -2, -2}}});
  for (int m = 0; m < 4; ++m) EXPECT_TRUE(forced_script_check(r, {(m & 1) != 0, (m & 2) != 0})) << m;

  // Drop the red edge {t1R, f1L}: Left is no longer forced after t1R.
  const Game& g = r.game;
  const VertexSet drop{g.require_index("t1R"), g.require_index("f1L")};
  EdgeList red;
  for (const auto& e : g.red_edges())
    if (e != drop) red.push_back(e);
  ASSERT_EQ(red.size() + 1, g.red_edges().size());
  ReductionOutput tampered{Game::from_indices(g.names(), g.blue_edges(), red), r.provenance, {}};
  try {
    forced_script_check(tampered, {true, true});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ScriptViolation);
    EXPECT_NE(std::string(e.what()).find("step 2"), std::string::npos) << e.what();
  }
}

TEST(Embedding, Rank4) {
  const auto e = mm_rank4_embed(new_game({"a", "b"}, {{"a"}}, {{"b"}}));
  EXPECT_EQ(e.h.edges, (EdgeList{{0, 2}, {1, 3}}));
  EXPECT_EQ(e.h.names[2], "u_L");
  const auto bf = mm_rank4_embed(butterfly());
  EXPECT_EQ(bf.h.edges.size(), 4U);
  EXPECT_EQ(max_edge_size(bf.h.edges), 4);
  EXPECT_THROW(mm_rank4_embed(w_k(5)), Error);
}

TEST(Batteries, QbfEquivalence) {
  const Report r = verify_qbf_reduction();
  bool saw = false;
  for (const auto& [k, v] : r.fields)
    if (k == "qbf33_solver") {
      saw = true;
      EXPECT_EQ(v, "230/230");
    }
  EXPECT_TRUE(saw) << r.to_text();
}

TEST(Batteries, Rank4Small) {
  const Report r = verify_rank4_embedding(2, 60);
  EXPECT_TRUE(r.ok()) << r.to_text();
}
