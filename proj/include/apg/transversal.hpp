#pragma once

#include <string>
#include <vector>

#include "apg/core_ops.hpp"
#include "apg/game.hpp"

namespace apg {

/// Single-color hypergraph (V, E).
struct Hypergraph {
  std::vector<std::string> names;
  EdgeList edges;

  int num_vertices() const { return static_cast<int>(names.size()); }

  static Hypergraph anonymous(int n, EdgeList edges) {
    Hypergraph h;
    for (int i = 0; i < n; ++i) h.names.push_back("v" + std::to_string(i));
    h.edges = std::move(edges);
    return h;
  }
};

inline constexpr int kDefaultTransversalBound = 22;

/// Inclusion-minimal members of a set family (duplicates removed).
inline EdgeList antichain(EdgeList edges) {
  canonicalize_edges(edges);
  auto out = prune_superset_edges(edges);
  std::sort(out.begin(), out.end(), lex_less<2>);
  return out;
}

/// All inclusion-minimal vertex sets meeting every edge, by exhaustive
/// subset enumeration. An edgeless hypergraph yields the family {∅}.
inline EdgeList minimal_transversals(const Hypergraph& h, int bound = kDefaultTransversalBound) {
  const int n = h.num_vertices();
  if (n > bound)
    throw Error(ErrorKind::TooLarge, std::to_string(n) + " vertices exceed the transversal bound " +
                                         std::to_string(bound));
  std::vector<std::uint32_t> edge_masks;
  for (const auto& e : h.edges) {
    std::uint32_t m = 0;
    e.for_each([&](int v) { m |= 1U << v; });
    edge_masks.push_back(m);
  }
  auto hits_all = [&](std::uint32_t s) {
    for (auto m : edge_masks)
      if (!(m & s)) return false;
    return true;
  };
  EdgeList out;
  const std::uint32_t limit = n == 32 ? 0xffffffffU : (1U << n) - 1;
  for (std::uint64_t s64 = 0; s64 <= limit; ++s64) {
    const auto s = static_cast<std::uint32_t>(s64);
    if (!hits_all(s)) continue;
    bool minimal = true;
    for (std::uint32_t rest = s; rest && minimal; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      if (hits_all(s & ~bit)) minimal = false;
    }
    if (!minimal) continue;
    VertexSet t;
    for (int v = 0; v < n; ++v)
      if (s & (1U << v)) t.insert(v);
    out.push_back(t);
  }
  std::sort(out.begin(), out.end(), lex_less<2>);
  return out;
}

enum class EmbedMode { EmptyRed, TransversalRed };

/// Maker-Breaker game on h as an achievement game with Maker as Left:
/// either Right gets no edges (a Breaker win reads as a draw) or Right's
/// edges are the minimal transversals of h.
inline Game embed_maker_breaker(const Hypergraph& h, EmbedMode mode, int bound = kDefaultTransversalBound) {
  if (mode == EmbedMode::EmptyRed) return Game::from_indices(h.names, h.edges, {});
  if (h.edges.empty())
    throw Error(ErrorKind::EdgelessHypergraph, "Breaker has already won; no game with an empty red edge");
  return Game::from_indices(h.names, h.edges, minimal_transversals(h, bound));
}

}  // namespace apg
