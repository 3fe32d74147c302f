#pragma once

#include <array>
#include <initializer_list>

#include "apg/outcome.hpp"

namespace apg {

/// Bit set over the six outcomes, indexed by Outcome::index().
class OutcomeSet {
 public:
  constexpr OutcomeSet() = default;
  constexpr OutcomeSet(std::initializer_list<Outcome::Kind> kinds) {
    for (auto k : kinds) bits_ |= 1U << static_cast<unsigned>(k);
  }
  constexpr bool contains(Outcome o) const { return (bits_ >> o.index()) & 1U; }
  constexpr unsigned bits() const { return bits_; }
  friend constexpr bool operator==(OutcomeSet, OutcomeSet) = default;

 private:
  unsigned bits_ = 0;
};

namespace detail {
using K = Outcome::Kind;
// Possible outcomes of a disjoint union. Row: o(G'), column: o(G), both in
// the order L, L-, N, D, R-, R.
inline constexpr std::array<std::array<OutcomeSet, 6>, 6> kUnionTable{{
    {{{K::L}, {K::L}, {K::L, K::Lminus, K::N}, {K::L}, {K::L, K::Lminus, K::N},
      {K::L, K::Lminus, K::N, K::Rminus, K::R}}},
    {{{K::L}, {K::L, K::Lminus}, {K::L, K::Lminus, K::N}, {K::Lminus}, {K::Lminus, K::N, K::Rminus},
      {K::N, K::Rminus, K::R}}},
    {{{K::L, K::Lminus, K::N}, {K::L, K::Lminus, K::N}, {K::L, K::Lminus, K::N, K::Rminus, K::R}, {K::N},
      {K::N, K::Rminus, K::R}, {K::N, K::Rminus, K::R}}},
    {{{K::L}, {K::Lminus}, {K::N}, {K::D}, {K::Rminus}, {K::R}}},
    {{{K::L, K::Lminus, K::N}, {K::Lminus, K::N, K::Rminus}, {K::N, K::Rminus, K::R}, {K::Rminus},
      {K::Rminus, K::R}, {K::R}}},
    {{{K::L, K::Lminus, K::N, K::Rminus, K::R}, {K::N, K::Rminus, K::R}, {K::N, K::Rminus, K::R}, {K::R},
      {K::R}, {K::R}}},
}};
}  // namespace detail

/// Outcomes the union of a game with outcome `o` and one with outcome
/// `o_prime` can have.
constexpr OutcomeSet union_cell(Outcome o, Outcome o_prime) {
  return detail::kUnionTable[static_cast<std::size_t>(o_prime.index())][static_cast<std::size_t>(o.index())];
}

constexpr bool verify_union_cell(Outcome o, Outcome o_prime, Outcome observed) {
  return union_cell(o, o_prime).contains(observed);
}

}  // namespace apg
