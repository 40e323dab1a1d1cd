#include "latticemill/hilbert.hpp"

#include "latticemill/binomial.hpp"
#include "latticemill/errors.hpp"

namespace latticemill {

BettiTable hibi_betti_table(const Poset& P, const BooleanCensus& b) {
  const int p = P.size();
  if (p < 1) throw Error("hibi_betti_table needs p >= 1");
  BettiTable T;
  T.n = 2 * p;
  T.rows.push_back({{0, BigInt(1)}});
  for (std::size_t m = 0; m < b.b.size(); ++m)
    T.rows.push_back({{p + static_cast<int>(m), b.b[m]}});
  return T;
}

BettiTable dual_boundary_betti_table(const FVector& fv, int n) {
  const int d = fv.dimension_plus_one();
  BettiTable T;
  T.n = n;
  T.rows.push_back({{0, BigInt(1)}});
  for (int i = 1; i <= d + 1; ++i) {
    const BigInt& mult = fv.f[static_cast<std::size_t>(d - i + 1)];
    std::map<int, BigInt> row;
    if (mult != 0) row[n - d - 1 + i] = mult;
    T.rows.push_back(std::move(row));
  }
  return T;
}

BigInt hilbert_from_betti(const BettiTable& T, long long t) {
  if (t < 0) throw Error("degree bound must be nonnegative");
  BigInt total = 0;
  for (std::size_t j = 0; j < T.rows.size(); ++j)
    for (const auto& [twist, mult] : T.rows[j]) {
      BigInt term = mult * binom(T.n - twist + t, T.n);
      if (j % 2 == 0)
        total += term;
      else
        total -= term;
    }
  return total;
}

BigInt hilbert_hibi_closed_form(int p, const BooleanCensus& b, long long t) {
  if (t < 0) throw Error("degree bound must be nonnegative");
  BigInt total = binom(t + 2 * p, 2 * p);
  for (std::size_t i = 0; i < b.b.size(); ++i) {
    BigInt term = b.b[i] * binom(t + p - static_cast<long long>(i), 2 * p);
    if (i % 2 == 0)
      total -= term;
    else
      total += term;
  }
  return total;
}

BigInt hilbert_dual_closed_form(int n, int d, const FVector& fv, long long t) {
  if (t < 0) throw Error("degree bound must be nonnegative");
  BigInt total = 0;
  for (int i = 0; i <= n - d - 1; ++i) total += binom(n, i) * binom(t, i);
  for (int j = 0; j <= d; ++j)
    total += (binom(n, j) - fv.f[static_cast<std::size_t>(j)]) * binom(t, n - j);
  return total;
}

BigInt peskine_szpiro_multiplicity(const BettiTable& T, int h) {
  if (h < 1) throw Error("height must be positive");
  BigInt alternating = 0;
  for (std::size_t j = 1; j < T.rows.size(); ++j)
    for (const auto& [twist, mult] : T.rows[j]) {
      BigInt term = mult * boost::multiprecision::pow(BigInt(twist), static_cast<unsigned>(h));
      if (j % 2 == 0)
        alternating += term;
      else
        alternating -= term;
    }

  BigInt factorial = 1;
  for (int i = 2; i <= h; ++i) factorial *= i;
  BigRat e(alternating, factorial);
  if (h % 2 != 0) e = -e;

  if (denominator(e) != 1)
    throw NonIntegralError("multiplicity is not integral; table and height disagree");
  if (e < 0)
    throw NonIntegralError("multiplicity is negative; table and height disagree");
  return numerator(e);
}

} // namespace latticemill
