#pragma once
#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "pants/errors.hpp"

namespace pants {

// A subset of {0,...,n} for small n, as a bitmask.  Indices must stay
// below 10 so the single-digit text form "0245" is unambiguous; the
// library's guards keep n far below that anyway.
struct IndexSet {
  std::uint32_t bits = 0;

  constexpr IndexSet() = default;
  constexpr explicit IndexSet(std::uint32_t b) : bits(b) {}

  static constexpr IndexSet single(int i) { return IndexSet(1u << i); }
  static constexpr IndexSet full(int n) {  // {0,...,n}
    return IndexSet((n + 1 >= 32) ? ~0u : ((1u << (n + 1)) - 1u));
  }

  constexpr bool empty() const { return bits == 0; }
  constexpr int size() const { return std::popcount(bits); }
  constexpr bool contains(int i) const { return (bits >> i) & 1u; }
  constexpr bool subset_of(IndexSet o) const { return (bits & ~o.bits) == 0; }
  constexpr bool intersects(IndexSet o) const { return (bits & o.bits) != 0; }

  constexpr IndexSet operator|(IndexSet o) const { return IndexSet(bits | o.bits); }
  constexpr IndexSet operator&(IndexSet o) const { return IndexSet(bits & o.bits); }
  constexpr IndexSet operator-(IndexSet o) const { return IndexSet(bits & ~o.bits); }

  constexpr int min() const { return std::countr_zero(bits); }  // bits != 0

  std::vector<int> elements() const;

  // Concatenated digits, e.g. {0,2,4} -> "024"; empty set -> "".
  std::string str() const;
  static IndexSet parse(const std::string& digits);

  friend constexpr auto operator<=>(IndexSet a, IndexSet b) = default;
};

// All nonempty subsets of `universe`, ascending by mask value.
std::vector<IndexSet> nonempty_subsets(IndexSet universe);

}  // namespace pants
