#include "deltaritz/errors.hpp"

#include <sstream>

namespace deltaritz {

const char* to_string(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::Domain: return "domain";
    case ErrorCategory::Pole: return "pole";
    case ErrorCategory::IndexOutOfRange: return "index";
    case ErrorCategory::IllConditionedBasis: return "ill-conditioned-basis";
    case ErrorCategory::Convergence: return "convergence";
    case ErrorCategory::RootFinding: return "root-finding";
    case ErrorCategory::Unsupported: return "unsupported";
    case ErrorCategory::Arithmetic: return "arithmetic";
    case ErrorCategory::Parse: return "parse";
  }
  return "unknown";
}

namespace {

std::string pole_message(double location) {
  std::ostringstream out;
  out << "gamma function pole at x = " << location;
  return out.str();
}

std::string pivot_message(std::size_t pivot) {
  std::ostringstream out;
  out << "overlap matrix is not positive definite at working precision (Cholesky pivot "
      << pivot << "); increase --digits or reduce N";
  return out.str();
}

std::string bracket_message(const std::string& what, double lo, double hi) {
  std::ostringstream out;
  out.precision(17);
  out << what << " (bracket [" << lo << ", " << hi << "])";
  return out.str();
}

}  // namespace

PoleError::PoleError(double location)
    : Error(ErrorCategory::Pole, pole_message(location)), location_(location) {}

IllConditionedBasisError::IllConditionedBasisError(std::size_t pivot)
    : Error(ErrorCategory::IllConditionedBasis, pivot_message(pivot)), pivot_(pivot) {}

RootFindingError::RootFindingError(const std::string& what, double lo, double hi)
    : Error(ErrorCategory::RootFinding, bracket_message(what, lo, hi)), lo_(lo), hi_(hi) {}

}  // namespace deltaritz
