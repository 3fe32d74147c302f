#include <gtest/gtest.h>

#include "apg/apg.hpp"

using namespace apg;

TEST(ApgFormat, Parse) {
  const Game g = parse_apg_string("# comment\nvertices a b\nblue a c\n\nred c\nred b a  # tail\n");
  EXPECT_EQ(g.names(), (std::vector<std::string>{"a", "b", "c"}));
  EXPECT_EQ(g.blue_edges(), (EdgeList{{0, 2}}));
  EXPECT_EQ(g.red_edges(), (EdgeList{{0, 1}, {2}}));
}

TEST(ApgFormat, Implicit) {
  const Game g = parse_apg_string("blue u v\nblue v w\n");
  EXPECT_EQ(g.names(), (std::vector<std::string>{"u", "v", "w"}));
  EXPECT_EQ(to_apg(g), "vertices u v w\nblue u v\nblue v w\n");
  EXPECT_EQ(parse_apg_string("").num_vertices(), 0);
}

TEST(ApgFormat, Errors) {
  auto expect = [](const std::string& text, ErrorKind kind, const std::string& where) {
    try {
      parse_apg_string(text, "g.apg");
      ADD_FAILURE() << text;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), kind) << e.what();
      EXPECT_NE(std::string(e.what()).find(where), std::string::npos) << e.what();
    }
  };
  expect("vertices a\nblue\n", ErrorKind::EmptyEdge, "g.apg:2:");
  expect("vertices a a\n", ErrorKind::DuplicateVertex, "g.apg:1:");
  expect("blue a\nvertices a\n", ErrorKind::Parse, "g.apg:2:");
  expect("\n\ngreen a\n", ErrorKind::Parse, "g.apg:3:");
  expect("vertices a\nvertices b\n", ErrorKind::Parse, "g.apg:2:");
}

TEST(ApgFormat, RoundTrip) {
  Rng rng(3);
  RandomGameSpec spec;
  spec.max_vertices = 12;
  spec.max_blue = spec.max_red = 10;
  for (int i = 0; i < 500; ++i) {
    const Game g = random_game(rng, spec);
    ASSERT_EQ(parse_apg_string(to_apg(g)), g);
  }
  for (const Game& g : {butterfly(), w_k(4, Player::Right), sat_to_32(all_sign_patterns()).game,
                        qbf_to_33(QbfFormula{2, {{1, 2, 2}}}).game})
    EXPECT_EQ(parse_apg_string(to_apg(g)), g);
}

TEST(ApgFormat, UnwritableName) {
  EXPECT_THROW(to_apg(Game::from_indices({"a b"}, {}, {})), Error);
}

TEST(Parallel, OrderedResults) {
  const auto out = parallel_map<int>(
      1000, [] { return 0; }, [](int&, std::size_t i) { return static_cast<int>(i * i); }, 4);
  for (std::size_t i = 0; i < out.size(); ++i) ASSERT_EQ(out[i], static_cast<int>(i * i));
  EXPECT_THROW(parallel_map<int>(
                   10, [] { return 0; },
                   [](int&, std::size_t i) -> int {
                     if (i == 7) throw Error(ErrorKind::Usage, "boom");
                     return 0;
                   },
                   3),
               Error);
}

TEST(Report, ThreadCountDoesNotChangeText) {
  // Reports depend only on the seed, not on scheduling.
  EXPECT_EQ(verify_union(5, 120).to_text(), verify_union(5, 120).to_text());
  Report r{"x", 9, {}, 0, false, {}};
  r.add_count("k", 3, 4);
  r.fail("bad");
  EXPECT_EQ(r.to_text(), "verify: x\nseed: 9\nk: 3/4\nfailures: 1\nfailure.0: bad\nstatus: FAILED\n");
}

TEST(Rng, Reproducible) {
  Rng a(42), b(42);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.uniform(0, 1000000), b.uniform(0, 1000000));
  Rng s1 = Rng(42).split(3), s2 = Rng(42).split(3), s3 = Rng(42).split(4);
  const int x = s1.uniform(0, 1 << 30);
  EXPECT_EQ(x, s2.uniform(0, 1 << 30));
  EXPECT_NE(x, s3.uniform(0, 1 << 30));
}
