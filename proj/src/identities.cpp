#include "latticemill/identities.hpp"

#include <functional>

#include "latticemill/binomial.hpp"
#include "latticemill/errors.hpp"
#include "latticemill/graph.hpp"
#include "latticemill/hilbert.hpp"
#include "latticemill/monomial.hpp"
#include "latticemill/parallel.hpp"

namespace latticemill {

namespace {

BigInt at_or_zero(const std::vector<BigInt>& v, long long i) {
  if (i < 0 || i >= static_cast<long long>(v.size())) return 0;
  return v[static_cast<std::size_t>(i)];
}

} // namespace

void VerificationReport::add_row(long long index, BigInt lhs, BigInt rhs) {
  rows.push_back({index, std::move(lhs), std::move(rhs)});
}

void VerificationReport::finalize() {
  pass = true;
  for (const Row& r : rows)
    if (r.lhs != r.rhs) pass = false;
}

VerificationReport verify_theorem1(const Poset& P, const std::string& instance) {
  const int p = P.size();
  VerificationReport rep;
  rep.identity = "theorem1";
  rep.instance = instance;

  // Left: clique counts of G(P). Right: Boolean-interval census of J(P).
  CliqueVector cv = clique_vector(build_GP(P));
  BooleanCensus census = boolean_interval_counts(order_ideals(P), P);

  for (int i = p; i <= 2 * p; ++i) {
    BigInt lhs = at_or_zero(cv.f, 2 * p - i); // f_{2p-i-1}
    BigInt rhs = 0;
    for (std::size_t m = 0; m < census.b.size(); ++m) {
      BigInt term = census.b[m] * binom(p - static_cast<long long>(m), 2 * p - i);
      if (m % 2 == 0)
        rhs += term;
      else
        rhs -= term;
    }
    rep.add_row(i, std::move(lhs), std::move(rhs));
  }
  rep.finalize();
  return rep;
}

VerificationReport verify_antichain_example(int p) {
  if (p < 1) throw Error("antichain example needs p >= 1");
  Poset P = antichain_poset(p);
  VerificationReport rep;
  rep.identity = "antichain-example";
  rep.instance = "antichain p=" + std::to_string(p);

  BooleanCensus census = boolean_interval_counts(order_ideals(P), P);
  for (int i = 0; i <= p; ++i)
    rep.add_row(i, at_or_zero(census.b, i), binom(p, i) * pow2(p - i));

  CliqueVector cv = clique_vector(build_GP(P));
  for (int i = -1; i <= p - 1; ++i)
    rep.add_row(i, at_or_zero(cv.f, i + 1), binom(p, i + 1) * pow2(i + 1));

  // The displayed binomial identity the two closed forms force.
  for (int i = p; i <= 2 * p; ++i) {
    BigInt lhs = binom(p, 2 * p - i) * pow2(2 * p - i);
    BigInt rhs = 0;
    for (int m = 0; m <= p; ++m) {
      BigInt term = binom(p, m) * binom(p - m, 2 * p - i) * pow2(p - m);
      if (m % 2 == 0)
        rhs += term;
      else
        rhs -= term;
    }
    rep.add_row(i, std::move(lhs), std::move(rhs));
  }
  rep.finalize();
  return rep;
}

VerificationReport verify_gamma_dual_is_clique_complex(const Poset& P,
                                                       const std::string& instance) {
  if (P.size() < 1) throw Error("gamma-dual verification needs p >= 1");
  VerificationReport rep;
  rep.identity = "gamma-dual";
  rep.instance = instance;

  SimplicialComplex dual = alexander_dual(complex_of_ideal(hibi_ideal(P)));
  SimplicialComplex cliques = clique_complex(build_GP(P));

  long long idx = 0;
  rep.add_row(idx++, BigInt(dual.facets().size()), BigInt(cliques.facets().size()));
  const std::size_t nf = std::min(dual.facets().size(), cliques.facets().size());
  for (std::size_t i = 0; i < nf; ++i)
    rep.add_row(idx++, BigInt(dual.facets()[i]), BigInt(cliques.facets()[i]));

  // Ideal form: the dual's Stanley-Reisner ideal is the comparability
  // edge ideal.
  MonomialIdeal lhs_ideal = stanley_reisner_ideal(dual);
  MonomialIdeal rhs_ideal = edge_ideal(bipartite_G2(P));
  rep.add_row(idx++, BigInt(lhs_ideal.generators().size()), BigInt(rhs_ideal.generators().size()));
  const std::size_t ng = std::min(lhs_ideal.generators().size(), rhs_ideal.generators().size());
  for (std::size_t i = 0; i < ng; ++i)
    rep.add_row(idx++, BigInt(lhs_ideal.generators()[i]), BigInt(rhs_ideal.generators()[i]));

  // Top clique size is |P|.
  rep.add_row(idx++, BigInt(cliques.dim() + 1), BigInt(P.size()));
  rep.finalize();
  return rep;
}

VerificationReport verify_dehn_sommerville(const SimplicialComplex& c,
                                           const std::string& instance) {
  VerificationReport rep;
  rep.identity = "dehn-sommerville";
  rep.instance = instance;

  FVector fv = f_vector(c);
  const int d = fv.dimension_plus_one();

  for (int k = 0; k <= d; ++k) {
    BigInt rhs = 0;
    for (int i = k; i <= d; ++i) {
      BigInt term = binom(i, k) * fv.f[static_cast<std::size_t>(i)];
      if ((d - i) % 2 == 0)
        rhs += term;
      else
        rhs -= term;
    }
    rep.add_row(k, fv.f[static_cast<std::size_t>(k)], std::move(rhs));
  }

  // Euler-Poincare: sum_{i=0}^{d-1} (-1)^i f_i = 1 - (-1)^d.
  BigInt euler = 0;
  for (int i = 0; i < d; ++i) {
    if (i % 2 == 0)
      euler += fv.f[static_cast<std::size_t>(i) + 1];
    else
      euler -= fv.f[static_cast<std::size_t>(i) + 1];
  }
  rep.add_row(d + 1, std::move(euler), d % 2 == 0 ? BigInt(0) : BigInt(2));

  HVector hv = h_vector(fv);
  for (int k = 0; k <= d; ++k)
    rep.add_row(k, hv.h[static_cast<std::size_t>(k)], hv.h[static_cast<std::size_t>(d - k)]);

  rep.finalize();
  return rep;
}

VerificationReport verify_flag_corollary(const SimplicialComplex& c,
                                         const std::string& instance) {
  if (!is_flag(c))
    throw NotFlagError("flag corollary needs every minimal nonface to have two elements");

  VerificationReport rep;
  rep.identity = "flag-corollary";
  rep.instance = instance;
  rep.note = "stated for flag complexes, verified on polytope-boundary candidates";

  FVector fv = f_vector(c);
  const int d = fv.dimension_plus_one();
  const BigInt& f0 = fv.f[1];
  BigInt f1 = at_or_zero(fv.f, 2);
  BigInt nonedges = f0 * (f0 - 1) / 2 - f1;

  BigInt square_sum = 0;
  for (int i = 1; i <= d + 1; ++i) {
    BigInt base = f0 - d + i - 1;
    BigInt term = fv.f[static_cast<std::size_t>(d - i + 1)] * base * base;
    if (i % 2 == 0)
      square_sum += term;
    else
      square_sum -= term;
  }
  rep.add_row(0, 2 * nonedges, std::move(square_sum));

  // Multiplicity of the dual quotient at height 2 counts the nonedges.
  BettiTable dual_table = dual_boundary_betti_table(fv, c.ground_size());
  rep.add_row(1, peskine_szpiro_multiplicity(dual_table, 2), nonedges);

  rep.add_row(2, BigInt(height(stanley_reisner_ideal(alexander_dual(c)))), BigInt(2));

  rep.finalize();
  return rep;
}

std::vector<VerificationReport> run_corpus(const CorpusSpec& spec) {
  std::vector<std::function<VerificationReport()>> tasks;

  for (int p = 1; p <= spec.exhaustive_p_max; ++p) {
    std::vector<Poset> all = enumerate_posets(p);
    for (std::size_t i = 0; i < all.size(); ++i) {
      std::string label = "poset p=" + std::to_string(p) + " #" + std::to_string(i);
      Poset P = all[i];
      tasks.push_back([P, label] { return verify_theorem1(P, label); });
    }
  }

  for (int i = 0; i < spec.random_count; ++i) {
    std::uint64_t s = spec.seed + static_cast<std::uint64_t>(i);
    std::string label =
        "random p=" + std::to_string(spec.random_p) + " seed=" + std::to_string(s);
    int p = spec.random_p;
    tasks.push_back([p, s, label] { return verify_theorem1(random_poset(p, s), label); });
  }

  for (int p = 1; p <= spec.antichain_p_max; ++p)
    tasks.push_back([p] { return verify_antichain_example(p); });

  for (int d = 1; d <= spec.simplex_d_max; ++d) {
    std::string label = "simplex-boundary d=" + std::to_string(d);
    tasks.push_back([d, label] { return verify_dehn_sommerville(boundary_simplex(d), label); });
    if (is_flag(boundary_simplex(d)))
      tasks.push_back([d, label] { return verify_flag_corollary(boundary_simplex(d), label); });
  }

  for (int d = 1; d <= spec.cross_d_max; ++d) {
    std::string label = "cross-polytope d=" + std::to_string(d);
    tasks.push_back(
        [d, label] { return verify_dehn_sommerville(boundary_cross_polytope(d), label); });
    tasks.push_back(
        [d, label] { return verify_flag_corollary(boundary_cross_polytope(d), label); });
  }

  for (int d = 1; d <= spec.cyclic_d_max; ++d)
    for (int n = d + 1; n <= spec.cyclic_n_max; ++n) {
      std::string label = "cyclic-polytope n=" + std::to_string(n) + " d=" + std::to_string(d);
      tasks.push_back(
          [n, d, label] { return verify_dehn_sommerville(boundary_cyclic_polytope(n, d), label); });
      if (is_flag(boundary_cyclic_polytope(n, d)))
        tasks.push_back(
            [n, d, label] { return verify_flag_corollary(boundary_cyclic_polytope(n, d), label); });
    }

  std::vector<VerificationReport> reports(tasks.size());
  parallel_for(tasks.size(), [&](std::size_t i) {
    try {
      reports[i] = tasks[i]();
    } catch (const Error& e) {
      throw Error("corpus task " + std::to_string(i) + ": " + e.what());
    }
  });
  return reports;
}

} // namespace latticemill
