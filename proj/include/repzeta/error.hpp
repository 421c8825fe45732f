#pragma once

#include <stdexcept>
#include <string>

namespace repzeta {

/// Base of all library errors that are not plain precondition violations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematical invariant failed. Always indicates a bug or a false claim.
class MathError : public Error {
 public:
  using Error::Error;
};

/// A configured element/operation budget would be exceeded.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace repzeta
