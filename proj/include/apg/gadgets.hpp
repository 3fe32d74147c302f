#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apg/random.hpp"
#include "apg/solver.hpp"
#include "apg/union_table.hpp"

namespace apg {

namespace detail {
inline Game one_color(std::vector<std::string> names, EdgeList edges, Player owner) {
  if (owner == Player::Left) return Game::from_indices(std::move(names), std::move(edges), {});
  return Game::from_indices(std::move(names), {}, std::move(edges));
}
}  // namespace detail

/// Seven vertices alpha, beta1, beta2, gamma1..gamma4 and the edges
/// {alpha, beta_i, gamma_j} pairing beta1 with gamma1, gamma2 and beta2 with
/// gamma3, gamma4, all owned by `owner`.
inline Game butterfly(Player owner = Player::Left) {
  std::vector<std::string> names{"alpha", "beta1", "beta2", "gamma1", "gamma2", "gamma3", "gamma4"};
  EdgeList edges{{0, 1, 3}, {0, 1, 4}, {0, 2, 5}, {0, 2, 6}};
  return detail::one_color(std::move(names), std::move(edges), owner);
}

inline constexpr int kMaxWk = 8;

/// W_k: vertices u, v1..v_{2k-2}; edges are u plus any k-1 of the v's.
inline Game w_k(int k, Player owner = Player::Left) {
  if (k < 1) throw Error(ErrorKind::Usage, "k must be at least 1");
  if (k > kMaxWk) throw Error(ErrorKind::KTooLarge, "k = " + std::to_string(k) + " exceeds " + std::to_string(kMaxWk));
  std::vector<std::string> names{"u"};
  const int m = 2 * k - 2;
  for (int i = 1; i <= m; ++i) names.push_back("v" + std::to_string(i));
  EdgeList edges;
  for (unsigned mask = 0; mask < (1U << m); ++mask) {
    if (std::popcount(mask) != k - 1) continue;
    VertexSet e = VertexSet::singleton(0);
    for (int i = 0; i < m; ++i)
      if (mask & (1U << i)) e.insert(i + 1);
    edges.push_back(e);
  }
  return detail::one_color(std::move(names), std::move(edges), owner);
}

/// A small fixed game with the requested outcome.
inline Game outcome_exemplar(Outcome target) {
  using K = Outcome::Kind;
  switch (target.kind()) {
    case K::L: return Game::from_indices({"a", "b"}, {{0}, {1}}, {});
    case K::Lminus: return Game::from_indices({"a"}, {{0}}, {});
    case K::N: return Game::from_indices({"a"}, {{0}}, {{0}});
    case K::D: return Game::from_indices({"a"}, {}, {});
    case K::Rminus: return Game::from_indices({"a"}, {}, {{0}});
    case K::R: return Game::from_indices({"a", "b"}, {}, {{0}, {1}});
  }
  return Game{};
}

struct UnionWitness {
  Game g;
  Game g_prime;
  int pairs_tried = 0;
};

/// Looks for G, G' with o(G) = o, o(G') = o_prime and o(G ∪ G') = target,
/// over the fixed gadgets, their small unions, and seeded random games.
/// Gives up after `budget` union evaluations.
inline std::optional<UnionWitness> union_witness_search(Outcome o, Outcome o_prime, Outcome target,
                                                        int budget = 20000, std::uint64_t seed = 1) {
  if (!verify_union_cell(o, o_prime, target)) return std::nullopt;
  Solver solver;
  std::array<std::vector<Game>, 6> pools;
  int tried = 0;
  std::optional<UnionWitness> found;

  auto try_pair = [&](const Game& a, const Game& b) {
    if (found || tried >= budget) return;
    ++tried;
    if (solver.outcome(disjoint_union(a, b).game) == target) found = UnionWitness{a, b, tried};
  };
  // New game: record it and test it against the opposite pool.
  auto add = [&](const Game& g) {
    if (g.num_vertices() > 8 || found || tried >= budget) return;
    const Outcome oc = solver.outcome(g);
    pools[static_cast<std::size_t>(oc.index())].push_back(g);
    if (oc == o) {
      for (const auto& h : pools[static_cast<std::size_t>(o_prime.index())]) try_pair(g, h);
    } else if (oc == o_prime) {
      for (const auto& h : pools[static_cast<std::size_t>(o.index())]) try_pair(h, g);
    }
  };

  std::vector<Game> fixed;
  for (auto k : Outcome::all_kinds()) fixed.push_back(outcome_exemplar(k));
  for (Player p : {Player::Left, Player::Right}) {
    fixed.push_back(butterfly(p));
    for (int k = 1; k <= 4; ++k) fixed.push_back(w_k(k, p));
  }
  for (const auto& g : fixed) add(g);
  for (std::size_t i = 0; i < fixed.size() && !found; ++i)
    for (std::size_t j = i; j < fixed.size() && !found; ++j)
      if (fixed[i].num_vertices() + fixed[j].num_vertices() <= 8) add(disjoint_union(fixed[i], fixed[j]).game);

  Rng rng(seed);
  RandomGameSpec spec;
  spec.max_vertices = 6;
  spec.max_edge_size = 3;
  spec.max_blue = 5;
  spec.max_red = 5;
  for (int generated = 0; !found && tried < budget && generated < 4 * budget; ++generated)
    add(random_game(rng, spec));
  return found;
}

}  // namespace apg
