#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace reflectarr {

/// Raised when a zero divisor is inverted (zero cyclotomic number, zero rational).
class DivisionByZero : public std::domain_error {
 public:
  DivisionByZero() : std::domain_error("division by zero") {}
};

/// Raised when a Groebner computation runs out of its reduction-step budget.
/// A computation that throws this has produced no partial answer.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t limit)
      : std::runtime_error("computation budget exceeded (" + std::to_string(limit) +
                           " reduction steps)"),
        limit_(limit) {}
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
};

/// A group spec that has no polynomial construction (sporadic groups).
class UnsupportedConstruction : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (polynomials, group specs, files).
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::invalid_argument(line ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// An operation applied outside its domain (wrong family, rank too small).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A flat whose fixer cannot be classified unambiguously.
class UnclassifiableFixer : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace reflectarr
