#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace robustmine {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. `line()` is 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Argument outside the domain of an operation (item id out of range,
/// value vector of the wrong length, alpha outside [0, 1]).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An exponential-size computation was refused by a configured guard.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent or missing configuration, e.g. ranking closed itemsets
/// without a closed family.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Caller-supplied data contradicts itself (e.g. a superset with larger
/// support than its subset).
class DataInconsistencyError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition was violated.
class ContractError : public Error {
 public:
  using Error::Error;
};

}  // namespace robustmine
