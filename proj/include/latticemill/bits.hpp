#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace latticemill {

// Ground sets (poset elements, graph vertices, complex vertices, ring
// variables) are capped at 64 and live in a single machine word.
using Bits = std::uint64_t;

constexpr int kMaxGround = 64;

constexpr Bits bit(int i) { return Bits{1} << i; }

constexpr Bits full_mask(int n) {
  return n >= kMaxGround ? ~Bits{0} : (Bits{1} << n) - 1;
}

constexpr bool test_bit(Bits s, int i) { return (s >> i) & 1; }

constexpr int popcount(Bits s) { return std::popcount(s); }

constexpr bool subset_of(Bits a, Bits b) { return (a & ~b) == 0; }

constexpr int lowest_bit(Bits s) { return std::countr_zero(s); }

// Apply f(i) to every set bit, lowest first.
template <typename F>
void for_each_bit(Bits s, F&& f) {
  while (s) {
    f(std::countr_zero(s));
    s &= s - 1;
  }
}

inline std::vector<int> bits_to_vector(Bits s) {
  std::vector<int> out;
  for_each_bit(s, [&](int i) { out.push_back(i); });
  return out;
}

} // namespace latticemill
