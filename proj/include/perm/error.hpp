#pragma once

#include <stdexcept>
#include <string>

namespace perm {

// Base of every error the library reports. The CLI maps each subclass to a
// distinct exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed text: matrix files, element tokens, selector strings.
class ParseError : public Error {
 public:
  using Error::Error;
};

// The algebra cannot support the requested algorithm or variant.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

// Matrix shape violates a precondition (m > n, mismatched ground sets).
class ShapeError : public Error {
 public:
  using Error::Error;
};

// Checked 64-bit arithmetic left the representable range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

// Argument outside the supported domain (ground set too large, rank out of
// range, cardinality mismatch).
class DomainError : public Error {
 public:
  using Error::Error;
};

// An algebraic law failed during law_check().
class LawViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace perm
