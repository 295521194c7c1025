#pragma once

#include <stdexcept>
#include <string>

namespace gaussq {

enum class ErrorKind {
  invalid_argument,
  invalid_state,
  numerical_failure,
  unsupported_input,
  truncation,
};

// Base for every error raised by the toolkit. The CLI maps all of these to
// exit code 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorKind::invalid_argument, what) {}
};

// Correlation matrix violates the uncertainty relation.
class InvalidState : public Error {
 public:
  explicit InvalidState(const std::string& what)
      : Error(ErrorKind::invalid_state, what) {}
};

class NumericalFailure : public Error {
 public:
  explicit NumericalFailure(const std::string& what)
      : Error(ErrorKind::numerical_failure, what) {}
};

class UnsupportedInput : public Error {
 public:
  explicit UnsupportedInput(const std::string& what)
      : Error(ErrorKind::unsupported_input, what) {}
};

// Fock truncation too small for the requested accuracy.
class TruncationError : public Error {
 public:
  explicit TruncationError(const std::string& what)
      : Error(ErrorKind::truncation, what) {}
};

}  // namespace gaussq
