#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "apg/game.hpp"

namespace apg {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// mt19937_64 seeded through splitmix64; `split(i)` derives an independent
/// stream per task so parallel batteries stay reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed) {
    std::uint64_t s = seed;
    std::seed_seq seq{static_cast<std::uint32_t>(splitmix64(s)), static_cast<std::uint32_t>(splitmix64(s)),
                      static_cast<std::uint32_t>(splitmix64(s)), static_cast<std::uint32_t>(splitmix64(s))};
    engine_.seed(seq);
  }

  Rng split(std::uint64_t stream) const {
    std::uint64_t s = seed_ ^ (stream * 0xd1342543de82ef95ULL + 0x632be59bd9b4e019ULL);
    return Rng(splitmix64(s));
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

struct RandomGameSpec {
  int min_vertices = 1;
  int max_vertices = 6;
  int min_edge_size = 1;
  int max_edge_size = 3;
  int max_blue = 6;
  int max_red = 6;
};

inline VertexSet random_subset(Rng& rng, int n, int size) {
  std::vector<int> all(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  std::shuffle(all.begin(), all.end(), rng.engine());
  VertexSet s;
  for (int i = 0; i < size; ++i) s.insert(all[static_cast<std::size_t>(i)]);
  return s;
}

inline EdgeList random_edges(Rng& rng, int n, int count, int min_size, int max_size) {
  EdgeList out;
  const int hi = std::min(max_size, n);
  const int lo = std::min(min_size, hi);
  if (hi < 1) return out;
  for (int i = 0; i < count; ++i) out.push_back(random_subset(rng, n, rng.uniform(std::max(lo, 1), hi)));
  return out;
}

inline Game random_game(Rng& rng, const RandomGameSpec& spec) {
  const int n = rng.uniform(spec.min_vertices, spec.max_vertices);
  auto blue = random_edges(rng, n, rng.uniform(0, spec.max_blue), spec.min_edge_size, spec.max_edge_size);
  auto red = random_edges(rng, n, rng.uniform(0, spec.max_red), spec.min_edge_size, spec.max_edge_size);
  return Game::anonymous(n, std::move(blue), std::move(red));
}

}  // namespace apg
