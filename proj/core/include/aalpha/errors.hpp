#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aalpha {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid generator family or parameters.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Malformed edge-list text. Carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Argument outside the mathematical domain of an operation (e.g. alpha > 1).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Input graph violates a structural requirement of a closed form
// (regularity, connectivity, r >= 2, cospectral seeds, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// A caller broke an API contract, or a numerical result violated a
// guarantee (non-symmetric matrix, complex root of a real-rooted factor).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// Evaluation point too close to a pole.
class SingularityError : public Error {
 public:
  using Error::Error;
};

// Internal bookkeeping failed (e.g. root count does not match matrix order).
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace aalpha
