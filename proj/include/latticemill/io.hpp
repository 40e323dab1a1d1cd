#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "latticemill/graph.hpp"
#include "latticemill/identities.hpp"
#include "latticemill/poset.hpp"
#include "latticemill/simplicial.hpp"

namespace latticemill {

using Json = nlohmann::ordered_json;

// Poset text format: `p <count>`, then 1-based cover lines `a < b`;
// `#` starts a comment. Parse failures raise ParseError; a cyclic cover
// relation raises CycleError.
Poset parse_poset(std::istream& in);
Poset parse_poset_file(const std::string& path);
void write_poset(std::ostream& out, const Poset& P);

// Complex text format: `n <count>`, then one facet per line as 1-based
// vertices. No facet lines means the complex {∅}.
SimplicialComplex parse_complex(std::istream& in);
SimplicialComplex parse_complex_file(const std::string& path);
void write_complex(std::ostream& out, const SimplicialComplex& c);

// Graph text format (debug only): `n <count>`, then `u v` edge lines.
SimpleGraph parse_graph(std::istream& in);
void write_graph(std::ostream& out, const SimpleGraph& G);

// Canonical serialization of J(P): one bitset integer per line in the
// canonical (cardinality, value) order. Byte-stable for golden tests.
std::string lattice_canonical_text(const DistributiveLattice& L);

// Report JSON: {identity, instance, rows: [{index, lhs, rhs}], pass} with
// fixed key order; lhs/rhs are decimal strings so values never lose
// precision.
Json report_to_json(const VerificationReport& rep);
std::string report_to_text(const VerificationReport& rep);

} // namespace latticemill
