#pragma once

#include <map>
#include <vector>

#include "latticemill/bigint.hpp"
#include "latticemill/poset.hpp"
#include "latticemill/simplicial.hpp"

namespace latticemill {

// Betti data of a graded free resolution of a cyclic module R/I over n
// variables: rows[j] maps the twist a (a summand R(-a)) to its multiplicity.
// Row 0 is the free cover, always {0: 1}. Only Betti numbers and twists are
// modeled, never the differentials.
struct BettiTable {
  int n = 0;
  std::vector<std::map<int, BigInt>> rows;
};

// Per-degree cumulative Hilbert values (t, count).
struct HilbertSamples {
  std::vector<std::pair<long long, BigInt>> values;
};

// Resolution of S/H(P): row 0 is the cover, row m+1 carries twist p+m with
// multiplicity b_m, for 0 <= m <= k (k = census length - 1, the Sperner
// number). Requires p >= 1 and b = boolean_interval_counts of J(P).
BettiTable hibi_betti_table(const Poset& P, const BooleanCensus& b);

// Resolution of R/I(dual of a (d-1)-dimensional boundary complex with
// f-vector fv on n vertices): row i (1 <= i <= d+1) carries twist n-d-1+i
// with multiplicity f_{d-i}; the top row is R(-n)^1.
BettiTable dual_boundary_betti_table(const FVector& fv, int n);

// Cumulative Hilbert value of the resolved module at degree bound t:
// sum_j (-1)^j sum_a beta_{j,a} C(n - a + t, n). The cover (j = 0)
// contributes +C(n + t, n).
BigInt hilbert_from_betti(const BettiTable& T, long long t);

// Closed form for the Hibi quotient:
// C(t+2p, 2p) + sum_{i=0}^{k} (-1)^{i+1} b_i C(t+p-i, 2p).
BigInt hilbert_hibi_closed_form(int p, const BooleanCensus& b, long long t);

// Dual-complex closed form, for fv the f-vector of a (d-1)-complex on n
// ambient vertices; computes the Hilbert function of R/I(dual):
// sum_{i=0}^{n-d-1} C(n,i)C(t,i) + sum_{j=0}^{d} (C(n,j) - f_{j-1}) C(t,n-j).
BigInt hilbert_dual_closed_form(int n, int d, const FVector& fv, long long t);

// Hilbert-Samuel multiplicity of R/I from its Betti table and the height h
// of I: e = ((-1)^h / h!) sum_{j>=1} (-1)^j sum_a beta_{j,a} a^h, evaluated
// in exact rationals. Throws NonIntegralError when the result is not a
// nonnegative integer (a malformed table/height pair).
BigInt peskine_szpiro_multiplicity(const BettiTable& T, int h);

} // namespace latticemill
