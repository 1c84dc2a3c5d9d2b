#pragma once

#include <stdexcept>
#include <string>

namespace mapenum {

// Base for all library failures.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

// Operands live in different radical extensions.
class FieldMismatch : public Error {
 public:
  using Error::Error;
};

// A series, expansion or numeric computation was asked for more than its
// truncation order or working precision can deliver.
class ShortfallError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed (structure that must hold did not).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace mapenum
