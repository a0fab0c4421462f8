#pragma once

#include <stdexcept>
#include <string>

namespace fecc {

/// Raised when a construction parameter violates its precondition
/// (e.g. n < 2m+1, a negative index, an out-of-range form degree).
class InvalidParameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a smooth input cannot supply a derivative of the order a
/// node functional needs.
class MissingDerivative : public std::out_of_range {
 public:
  MissingDerivative(int requested, int available)
      : std::out_of_range("derivative of order " + std::to_string(requested) +
                          " requested, callbacks provide up to order " +
                          std::to_string(available)),
        requested_(requested),
        available_(available) {}

  int requested() const noexcept { return requested_; }
  int available() const noexcept { return available_; }

 private:
  int requested_;
  int available_;
};

/// Raised when text input (rational, polynomial literal, grid spec) is malformed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fecc
