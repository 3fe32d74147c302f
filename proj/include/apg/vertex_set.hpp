#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace apg {

/// Fixed-width set of vertex indices backed by an array of machine words.
template <std::size_t Words>
class BasicVertexSet {
 public:
  static constexpr std::size_t kCapacity = Words * 64;

  constexpr BasicVertexSet() = default;
  constexpr BasicVertexSet(std::initializer_list<int> elems) {
    for (int v : elems) insert(v);
  }

  static constexpr BasicVertexSet singleton(int v) {
    BasicVertexSet s;
    s.insert(v);
    return s;
  }

  /// The set {0, ..., n-1}.
  static constexpr BasicVertexSet prefix(int n) {
    BasicVertexSet s;
    for (std::size_t w = 0; w < Words; ++w) {
      const int lo = static_cast<int>(w * 64);
      if (n >= lo + 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > lo) {
        s.words_[w] = (std::uint64_t{1} << (n - lo)) - 1;
      }
    }
    return s;
  }

  constexpr void insert(int v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  constexpr void erase(int v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  constexpr bool contains(int v) const { return (words_[v >> 6] >> (v & 63)) & 1U; }

  constexpr bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }

  constexpr int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  /// Lowest element, or -1 when empty.
  constexpr int front() const {
    for (std::size_t i = 0; i < Words; ++i)
      if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    return -1;
  }

  /// Smallest element strictly greater than v, or -1.
  constexpr int next(int v) const {
    ++v;
    if (v >= static_cast<int>(kCapacity)) return -1;
    std::size_t i = static_cast<std::size_t>(v) >> 6;
    std::uint64_t w = words_[i] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (w) return static_cast<int>(i * 64) + std::countr_zero(w);
      if (++i == Words) return -1;
      w = words_[i];
    }
  }

  constexpr bool intersects(const BasicVertexSet& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  constexpr bool subset_of(const BasicVertexSet& o) const {
    for (std::size_t i = 0; i < Words; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  constexpr BasicVertexSet& operator|=(const BasicVertexSet& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] |= o.words_[i];
    return *this;
  }
  constexpr BasicVertexSet& operator&=(const BasicVertexSet& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  constexpr BasicVertexSet& operator-=(const BasicVertexSet& o) {
    for (std::size_t i = 0; i < Words; ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend constexpr BasicVertexSet operator|(BasicVertexSet a, const BasicVertexSet& b) { return a |= b; }
  friend constexpr BasicVertexSet operator&(BasicVertexSet a, const BasicVertexSet& b) { return a &= b; }
  friend constexpr BasicVertexSet operator-(BasicVertexSet a, const BasicVertexSet& b) { return a -= b; }

  /// Raw word order; fast and total, used for hashing and canonical keys.
  friend constexpr auto operator<=>(const BasicVertexSet&, const BasicVertexSet&) = default;

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int v = front(); v >= 0; v = next(v)) out.push_back(v);
    return out;
  }

  template <typename F>
  constexpr void for_each(F&& f) const {
    for (std::size_t i = 0; i < Words; ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        f(static_cast<int>(i * 64) + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  constexpr std::uint64_t word(std::size_t i) const { return words_[i]; }

  std::size_t hash() const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

 private:
  std::array<std::uint64_t, Words> words_{};
};

/// Orders sets by their sorted element sequences ({0,2} < {1}); the order
/// used for human-facing output and for the canonical edge order of a Game.
template <std::size_t Words>
bool lex_less(const BasicVertexSet<Words>& a, const BasicVertexSet<Words>& b) {
  int x = a.front(), y = b.front();
  while (x >= 0 && y >= 0) {
    if (x != y) return x < y;
    x = a.next(x);
    y = b.next(y);
  }
  return x < 0 && y >= 0;
}

using VertexSet = BasicVertexSet<2>;
inline constexpr int kMaxVertices = static_cast<int>(VertexSet::kCapacity);

}  // namespace apg

template <std::size_t Words>
struct std::hash<apg::BasicVertexSet<Words>> {
  std::size_t operator()(const apg::BasicVertexSet<Words>& s) const { return s.hash(); }
};
