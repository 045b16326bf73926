#pragma once

#include <stdexcept>
#include <string>

namespace qcpc {

// Base class for everything the library throws on bad input or unmet
// preconditions.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands live in different fields.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// Arguments violate a documented precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input outside the supported scope (repeated-root codes, prime-power alphabets).
class OutOfScope : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the configured size budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Bound parameters do not yield a valid certificate.
class NoCertificate : public Error {
 public:
  using Error::Error;
};

// Malformed JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcpc
