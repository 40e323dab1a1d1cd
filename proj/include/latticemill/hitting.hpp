#pragma once

#include <vector>

#include "latticemill/bits.hpp"

namespace latticemill {

// Inclusion-minimal hitting sets of the edge sets, within {0..n-1}.
// Conventions: an empty edge list has the single transversal {}; an empty
// edge admits no transversal at all, so the result is empty. Branch-and-bound
// over the first unhit edge with exclusion sets; exponential worst case,
// which is fine at desk scale. Output is canonically sorted.
std::vector<Bits> minimal_transversals(const std::vector<Bits>& edges, int n);

// Minimum hitting-set size, with a greedy upper bound to prune the search.
// Requires a nonempty edge list with no empty edge.
int min_transversal_size(const std::vector<Bits>& edges, int n);

} // namespace latticemill
