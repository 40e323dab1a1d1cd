#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace latticemill {

// Deterministic RNG helpers. std::mt19937_64 has a standard-specified output
// sequence, but the std distributions do not, so bounded draws are done here.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  bool next_bool() { return engine_() & 1; }

  // Uniform in [0, bound), bound >= 1. Rejection sampling keeps it unbiased.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
      std::uint64_t v = engine_();
      if (v < limit) return v % bound;
    }
  }

  // Fisher-Yates with explicit draws; std::shuffle is implementation-defined.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i)
      std::swap(v[i - 1], v[next_below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

} // namespace latticemill
