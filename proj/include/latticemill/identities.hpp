#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "latticemill/bigint.hpp"
#include "latticemill/poset.hpp"
#include "latticemill/simplicial.hpp"

namespace latticemill {

// One verified identity on one instance. Both sides of every row are
// computed by pipelines that share nothing below the data-type layer, and
// pass holds exactly when every row agrees -- equality is exact, there are
// no tolerances anywhere.
struct VerificationReport {
  struct Row {
    long long index = 0;
    BigInt lhs;
    BigInt rhs;
  };

  std::string identity;
  std::string instance;
  std::vector<Row> rows;
  bool pass = false;
  std::string note; // free-form caveats; not part of the JSON schema

  void add_row(long long index, BigInt lhs, BigInt rhs);
  void finalize(); // sets pass from the rows
};

// f_{2p-i-1} of G(P) against the alternating Boolean-census sum
// sum_m (-1)^m b_m C(p-m, 2p-i), for p <= i <= 2p. The left side is clique
// counting, the right side lattice interval counting.
VerificationReport verify_theorem1(const Poset& P, const std::string& instance);

// The worked antichain family: census against C(p,i) 2^{p-i}, clique counts
// against C(p,i+1) 2^{i+1}, and the explicit binomial identity the two
// closed forms produce.
VerificationReport verify_antichain_example(int p);

// The dual of the Hibi complex equals the clique complex of G(P) (facet
// sets), its Stanley-Reisner ideal equals the comparability edge ideal, and
// the top clique size equals p.
VerificationReport verify_gamma_dual_is_clique_complex(const Poset& P,
                                                       const std::string& instance);

// Dehn-Sommerville equations, the Euler-Poincare special case, and the
// h-vector symmetry h_k = h_{d-k}. Reports residuals only; it never
// certifies that the input is a polytope boundary.
VerificationReport verify_dehn_sommerville(const SimplicialComplex& c,
                                           const std::string& instance);

// For a flag polytope-boundary candidate: 2[C(f_0,2) - f_1] against the
// alternating square sum over the dual resolution twists, the multiplicity
// evaluation at height 2, and the height-2 fact itself.
// Throws NotFlagError when some minimal nonface has size != 2.
VerificationReport verify_flag_corollary(const SimplicialComplex& c,
                                         const std::string& instance);

// Deterministic batch over the generator families below. Family sizes of 0
// switch a family off. Random poset i uses seed + i.
struct CorpusSpec {
  int exhaustive_p_max = 4; // theorem1 over all labeled posets, p = 1..max
  int random_p = 8;         // theorem1 over seeded random posets
  int random_count = 100;
  std::uint64_t seed = 1;
  int antichain_p_max = 6;
  int simplex_d_max = 7; // Dehn-Sommerville (+ flag when the boundary is flag)
  int cross_d_max = 6;   // Dehn-Sommerville + flag
  int cyclic_n_max = 10; // Dehn-Sommerville (+ flag when flag), d+1 <= n
  int cyclic_d_max = 6;
};

// Reports come back in fixed family order regardless of how many workers
// ran them (LATTICEMILL_THREADS caps parallelism). Instance errors are
// rethrown with the instance label attached.
std::vector<VerificationReport> run_corpus(const CorpusSpec& spec);

} // namespace latticemill
