#pragma once

#include <stdexcept>
#include <string>

namespace latticemill {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Construction / input errors (CLI maps these to exit code 2).
struct CycleError : Error { using Error::Error; };
struct IndexError : Error { using Error::Error; };
struct SizeError : Error { using Error::Error; };
struct DimensionError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

// Domain errors from operations whose preconditions exclude the input.
struct FullSimplexError : Error { using Error::Error; };
struct UnitIdealError : Error { using Error::Error; };
struct ZeroIdealError : Error { using Error::Error; };
struct NonIntegralError : Error { using Error::Error; };
struct NotFlagError : Error { using Error::Error; };

} // namespace latticemill
