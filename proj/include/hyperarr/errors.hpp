#pragma once

#include <stdexcept>
#include <string>

namespace hyperarr {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix/vector shape misuse (non-square det, mismatched lengths, ...).
struct DimensionError : Error {
  using Error::Error;
};

// Argument outside the operation's domain (bad subset size, k != 3, ...).
struct DomainError : Error {
  using Error::Error;
};

// Operation requires a generic arrangement and the input is not generic.
struct GenericityError : Error {
  using Error::Error;
};

// Malformed input document.
struct ParseError : Error {
  using Error::Error;
};

// Randomized construction exhausted its retry budget.
struct GenerationError : Error {
  using Error::Error;
};

}  // namespace hyperarr
