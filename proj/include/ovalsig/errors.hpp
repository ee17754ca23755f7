#pragma once

#include <stdexcept>
#include <string>

namespace ovalsig {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Scheme text did not conform to the grammar. `position` is a 0-based
/// offset into the input string.
struct ParseError : Error {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : Error(msg + " (at position " + std::to_string(pos) + ")"), position(pos) {}
};

struct SingularMatrixError : Error {
  SingularMatrixError() : Error("matrix is singular") {}
};

struct NotSymmetricError : Error {
  NotSymmetricError() : Error("matrix is not symmetric") {}
};

/// The characteristic data of a plumbing tree came out non-integral.
/// This signals a modeling bug, not a user error.
struct NonIntegralCharDataError : Error {
  using Error::Error;
};

struct NotCharacteristicError : Error {
  using Error::Error;
};

struct ZeroVectorError : Error {
  ZeroVectorError() : Error("characteristic vector is zero modulo p") {}
};

struct NonOddPrimeError : Error {
  NonOddPrimeError() : Error("p must be an odd prime") {}
};

struct EmptyLinkError : Error {
  EmptyLinkError() : Error("tree carries no arrows: the link is empty") {}
};

struct UndefinedResidueError : Error {
  UndefinedResidueError() : Error("denominator divisible by p: residue undefined") {}
};

struct BadParametersError : Error {
  using Error::Error;
};

struct NotEvenTypeError : Error {
  NotEvenTypeError() : Error("scheme is not of even type") {}
};

struct EmptySchemeError : Error {
  EmptySchemeError() : Error("even scheme must contain at least one oval") {}
};

}  // namespace ovalsig
