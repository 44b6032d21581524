#ifndef SEMIPROB_ERRORS_HPP
#define SEMIPROB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace semiprob {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Transitive closure of the input relation violated irreflexivity.
struct CycleError : Error {
  using Error::Error;
};

/// An element index is outside 1..n.
struct IndexError : Error {
  using Error::Error;
};

/// Operation requires a semiorder (no induced 2+2 or 3+1).
struct NotSemiorderError : Error {
  using Error::Error;
};

/// Input exceeds a configured size bound (see SEMIPROB_MAX_N).
struct SizeLimitError : Error {
  using Error::Error;
};

/// Sample length does not match the poset size.
struct LengthMismatchError : Error {
  using Error::Error;
};

/// Polynomial operands do not share a variable universe.
struct UnknownVariableError : Error {
  using Error::Error;
};

/// Integration bounds violate the degree/variable-order precondition.
struct DegreeError : Error {
  using Error::Error;
};

/// A tally contains a canonical code with no matching prediction.
struct MissingClassError : Error {
  using Error::Error;
};

/// Malformed textual input (poset files, polynomials, tallies).
struct ParseError : Error {
  using Error::Error;
};

}  // namespace semiprob

#endif
