#pragma once

#include <stdexcept>
#include <string>

namespace jgar {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad parameters, unparsable text, unknown letters.
class InputError : public Error {
 public:
  using Error::Error;
};

// A computation ran past one of its configured budgets.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// A precondition on certified structure was not met.
class NotCertified : public Error {
 public:
  using Error::Error;
};

}  // namespace jgar
