#pragma once

#include <algorithm>
#include <vector>

#include "apg/outcome.hpp"
#include "apg/vertex_set.hpp"

namespace apg {

using EdgeList = std::vector<VertexSet>;

/// Name-free view of an updated game: the unpicked vertices plus the live
/// edges of each color, already shrunk by the owner's picks. Every edge is a
/// nonempty subset of `free`. This is the representation the search
/// routines work on; Game adds names and validation on top.
struct Board {
  VertexSet free;
  EdgeList blue;
  EdgeList red;

  const EdgeList& edges_of(Player p) const { return p == Player::Left ? blue : red; }
  EdgeList& edges_of(Player p) { return p == Player::Left ? blue : red; }

  friend bool operator==(const Board&, const Board&) = default;
};

inline void canonicalize_edges(EdgeList& edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

inline void canonicalize(Board& b) {
  canonicalize_edges(b.blue);
  canonicalize_edges(b.red);
}

/// Vertices v such that {v} is an edge of the list.
inline VertexSet unit_vertices(const EdgeList& edges) {
  VertexSet out;
  for (const auto& e : edges)
    if (e.size() == 1) out |= e;
  return out;
}

inline bool has_edge_of_size_at_most(const EdgeList& edges, int k) {
  return std::any_of(edges.begin(), edges.end(), [k](const VertexSet& e) { return e.size() <= k; });
}

inline int max_edge_size(const EdgeList& edges) {
  int m = 0;
  for (const auto& e : edges) m = std::max(m, e.size());
  return m;
}

/// True when picking v fills an edge of p's color.
inline bool pick_completes(const Board& b, int v, Player p) {
  const auto single = VertexSet::singleton(v);
  const auto& mine = b.edges_of(p);
  return std::find(mine.begin(), mine.end(), single) != mine.end();
}

/// Board after `p` picks `v`. Precondition: the pick does not fill an edge.
inline Board after_pick(const Board& b, int v, Player p) {
  Board out;
  out.free = b.free;
  out.free.erase(v);
  auto& mine_out = out.edges_of(p);
  auto& theirs_out = out.edges_of(opponent(p));
  for (VertexSet e : b.edges_of(p)) {
    e.erase(v);
    mine_out.push_back(e);
  }
  for (const auto& e : b.edges_of(opponent(p)))
    if (!e.contains(v)) theirs_out.push_back(e);
  canonicalize(out);
  return out;
}

inline Board swap_colors(Board b) {
  std::swap(b.blue, b.red);
  return b;
}

/// Vertices that belong to at least one live edge.
inline VertexSet live_vertices(const Board& b) {
  VertexSet s;
  for (const auto& e : b.blue) s |= e;
  for (const auto& e : b.red) s |= e;
  return s;
}

}  // namespace apg
