#pragma once

#include <stdexcept>

namespace spatch {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// File could not be opened, read or written.
struct IOError : Error {
  using Error::Error;
};

/// File contents could not be interpreted as the expected format.
struct ParseError : Error {
  using Error::Error;
};

/// Input data violates a documented precondition or invariant.
struct ValidationError : Error {
  using Error::Error;
};

/// A numerical procedure failed (singular system, degenerate normal, ...).
struct NumericalError : Error {
  using Error::Error;
};

}  // namespace spatch
