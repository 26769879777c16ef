#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace honkit {

/// Malformed path or edge-list input. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Input contained no usable paths after comments and blank lines were dropped.
class EmptyInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caller passed a value outside an operation's documented domain.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Integer walk counts exceeded 64 bits.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A path has zero probability under the model it is evaluated against.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Internal invariant broken (e.g. negative degrees-of-freedom difference).
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Parameters for which no synthetic chain can be constructed.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace honkit
