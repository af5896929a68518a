#pragma once

#include <stdexcept>
#include <string>

namespace immvar {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A value violated an operation's preconditions (non-bijective permutation,
// size mismatch, element outside its domain, ...).
struct InvalidArgumentError : Error {
  using Error::Error;
};

// Malformed external input: instance files, matrices, subsets.
struct ParseError : Error {
  using Error::Error;
};

// A configured work bound was exceeded.
struct BoundError : Error {
  using Error::Error;
};

// An internal consistency check failed.
struct CheckError : Error {
  using Error::Error;
};

} // namespace immvar
