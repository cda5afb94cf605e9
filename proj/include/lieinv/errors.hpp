#pragma once

#include <stdexcept>
#include <string>

namespace lieinv {

/// Base of all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad algebra specification (family/rank combination or syntax).
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// Operands belong to different root systems.
class MismatchedAlgebra : public Error {
 public:
  MismatchedAlgebra() : Error("operands belong to different root systems") {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

class NotDominant : public Error {
 public:
  using Error::Error;
};

class NotSelfDual : public Error {
 public:
  using Error::Error;
};

/// A tensor-product decomposition ended with a negative multiplicity.
/// Genuine representations never do this, so it indicates a bug.
class InternalNegativeMultiplicity : public Error {
 public:
  using Error::Error;
};

/// Halving char^2 +- char(g^2) left a remainder.
class NonIntegralCharacter : public Error {
 public:
  using Error::Error;
};

/// A character computation would exceed the configured support cap.
class SizeCapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed weight/label text.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace lieinv
