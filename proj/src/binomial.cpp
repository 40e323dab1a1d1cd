#include "latticemill/binomial.hpp"

#include <vector>

namespace latticemill {

namespace {

thread_local std::vector<std::vector<BigInt>> pascal; // pascal[a][b], b <= a

void grow_to(long long a) {
  auto old = static_cast<long long>(pascal.size());
  if (a < old) return;
  pascal.resize(static_cast<std::size_t>(a) + 1);
  for (long long r = old; r <= a; ++r) {
    auto& row = pascal[static_cast<std::size_t>(r)];
    row.resize(static_cast<std::size_t>(r) + 1);
    row[0] = 1;
    row[static_cast<std::size_t>(r)] = 1;
    for (long long c = 1; c < r; ++c)
      row[static_cast<std::size_t>(c)] =
          pascal[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] +
          pascal[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)];
  }
}

} // namespace

const BigInt& binom(long long a, long long b) {
  static const thread_local BigInt zero = 0;
  if (b < 0 || a < 0 || b > a) return zero;
  grow_to(a);
  return pascal[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
}

BigInt pow2(long long e) {
  BigInt one = 1;
  return one << e;
}

} // namespace latticemill
