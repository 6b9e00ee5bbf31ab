#pragma once

#include <stdexcept>
#include <string>

namespace sepoly {

/// An internal cross-check failed: two independent routes disagree, or a
/// structural invariant that the theory guarantees does not hold.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A finite-sequence computation produced a residual that cannot come from
/// a polynomial of the requested degree.
class InconsistencyError : public IntegrityError {
 public:
  using IntegrityError::IntegrityError;
};

/// Input is well-formed but outside the mathematical domain of the
/// operation (non-palindromic polynomial, non-bipartite graph, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DegenerateSimplex : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The estimated amount of work exceeds the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double estimate)
      : std::runtime_error(what), estimate_(estimate) {}
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sepoly
