#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace degsplit {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed edge-list input. `line()` is 1-based.
class ParseError : public Error {
 public:
  enum class Kind { SelfLoop, Malformed };

  ParseError(Kind kind, std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), kind_(kind), line_(line) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  Kind kind_;
  std::size_t line_;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A numeric argument outside the domain of the function (e.g. p outside [0,1]).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Exhaustive oracle asked to enumerate more subsets than it supports.
class OracleLimit : public Error {
 public:
  using Error::Error;
};

class GeneratorLimit : public Error {
 public:
  using Error::Error;
};

/// Minimum degree below what the requested operation needs.
class DegreeTooLow : public Error {
 public:
  using Error::Error;
};

/// The calibration target is not attainable on (0, 1/2).
class NoRootInRange : public Error {
 public:
  using Error::Error;
};

/// Internal postcondition failure; always indicates a bug.
class StructureInvariantViolated : public Error {
 public:
  using Error::Error;
};

class EmptyCore : public Error {
 public:
  using Error::Error;
};

}  // namespace degsplit
