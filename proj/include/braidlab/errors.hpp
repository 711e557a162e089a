#pragma once

#include <stdexcept>
#include <string>

namespace braidlab {

// Base class for all library errors so callers can catch everything at once.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two operands live in braid groups on different strand counts.
struct StrandMismatchError : Error {
  using Error::Error;
};

// A puncture interval is out of range or too small/large to bound a curve.
struct IntervalError : Error {
  using Error::Error;
};

// An operation needs a curve of a specific topological type.
struct CurveTypeError : Error {
  using Error::Error;
};

// A framed multiplication would move marked holes out of the support set.
struct SupportError : Error {
  using Error::Error;
};

// A map given only by images of finitely many curves was asked for an
// image it does not define.
struct ExtensionalDomainError : Error {
  using Error::Error;
};

// An operation requires a map induced by an actual braid.
struct NonGeometricError : Error {
  using Error::Error;
};

// A ball enumeration exceeded its vertex budget.
struct VertexCapError : Error {
  using Error::Error;
};

// Malformed textual input (words, curves, serialized files).
struct ParseError : Error {
  using Error::Error;
};

// Caller violated a documented precondition of an API entry point.
struct UsageError : Error {
  using Error::Error;
};

}  // namespace braidlab
