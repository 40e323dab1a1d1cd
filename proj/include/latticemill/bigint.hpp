#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace latticemill {

// All counts in this library are exact. Clique and standard-monomial counts
// outgrow 64 bits well inside the supported parameter range, so everything
// combinatorial is BigInt; rationals appear only in the multiplicity formula.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

} // namespace latticemill
