#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace deltaritz {

// Machine-readable category, printed by the CLI next to the message.
enum class ErrorCategory {
  Domain,
  Pole,
  IndexOutOfRange,
  IllConditionedBasis,
  Convergence,
  RootFinding,
  Unsupported,
  Arithmetic,
  Parse,
};

const char* to_string(ErrorCategory category);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCategory::Domain, what) {}
};

class PoleError : public Error {
 public:
  explicit PoleError(double location);
  double location() const noexcept { return location_; }

 private:
  double location_;
};

class IndexError : public Error {
 public:
  explicit IndexError(const std::string& what)
      : Error(ErrorCategory::IndexOutOfRange, what) {}
};

// Cholesky of the overlap matrix hit a non-positive pivot.
class IllConditionedBasisError : public Error {
 public:
  explicit IllConditionedBasisError(std::size_t pivot);
  std::size_t pivot() const noexcept { return pivot_; }

 private:
  std::size_t pivot_;
};

class ConvergenceError : public Error {
 public:
  explicit ConvergenceError(const std::string& what)
      : Error(ErrorCategory::Convergence, what) {}
};

class RootFindingError : public Error {
 public:
  RootFindingError(const std::string& what, double lo, double hi);
  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }

 private:
  double lo_;
  double hi_;
};

class UnsupportedError : public Error {
 public:
  explicit UnsupportedError(const std::string& what)
      : Error(ErrorCategory::Unsupported, what) {}
};

class ArithmeticError : public Error {
 public:
  explicit ArithmeticError(const std::string& what)
      : Error(ErrorCategory::Arithmetic, what) {}
};

// Malformed user input (potential strings, CLI values).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorCategory::Parse, what) {}
};

}  // namespace deltaritz
