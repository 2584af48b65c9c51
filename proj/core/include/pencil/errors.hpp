#pragma once

#include <stdexcept>
#include <string>

namespace pencil {

/// Base class for all pencil errors. Subclasses map onto the CLI exit codes:
/// parse = 2, invariant = 3, ambiguous = 4, convergence = 5.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input document (bad JSON, missing keys, wrong shapes).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input violates a data invariant (asymmetry, dimension mismatch, non-finite values).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its contract.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// A verdict sits inside the tolerance band and cannot be decided either way.
/// The message names the quantity and the margin.
class AmbiguousError : public Error {
 public:
  using Error::Error;
};

/// An iteration cap was exceeded; the message carries the best iterate seen.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A dense linear-algebra backend failed to converge or returned garbage.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace pencil
