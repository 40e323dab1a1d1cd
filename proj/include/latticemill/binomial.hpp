#pragma once

#include "latticemill/bigint.hpp"

namespace latticemill {

// Exact binomial coefficient with the conventions the identity formulas rely
// on: C(a,b) = 0 whenever b < 0, a < 0, or 0 <= a < b, and C(a,0) = 1 for
// a >= 0. Backed by a lazily grown Pascal table; the table is thread_local,
// so concurrent corpus workers each keep their own copy.
const BigInt& binom(long long a, long long b);

// Convenience: 2^e as BigInt (e >= 0).
BigInt pow2(long long e);

} // namespace latticemill
