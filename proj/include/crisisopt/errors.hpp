#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace crisis {

/// Raised when an argument lies outside the mathematical domain of an operation
/// (t past maturity, non-positive strike, non-finite input, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Raised when two objects that must describe the same simulation disagree
/// (e.g. a factor matrix built on a different grid than the one requested).
class ConsistencyError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

struct ValidationIssue {
  std::string field;
  std::string message;  // e.g. "sigma must be positive (got 0)"
};

/// Collects every violated parameter invariant, not just the first one.
class ValidationError : public DomainError {
public:
  explicit ValidationError(std::vector<ValidationIssue> issues);

  const std::vector<ValidationIssue>& issues() const noexcept { return issues_; }

private:
  std::vector<ValidationIssue> issues_;
};

}  // namespace crisis
