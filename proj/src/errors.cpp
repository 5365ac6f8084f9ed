#include "crisisopt/errors.hpp"

#include <numeric>

namespace crisis {
namespace {

std::string join(const std::vector<ValidationIssue>& issues) {
  std::string out;
  for (const auto& issue : issues) {
    if (!out.empty()) out += "; ";
    out += issue.message;
  }
  return out.empty() ? std::string("invalid parameters") : out;
}

}  // namespace

ValidationError::ValidationError(std::vector<ValidationIssue> issues)
    : DomainError(join(issues)), issues_(std::move(issues)) {}

}  // namespace crisis
