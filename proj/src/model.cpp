#include "crisisopt/model.hpp"

#include <cmath>
#include <sstream>

#include "crisisopt/bounds.hpp"

namespace crisis {

std::string_view to_string(SolutionMode mode) noexcept {
  return mode == SolutionMode::Paper ? "paper" : "corrected";
}

std::string_view to_string(OptionKind kind) noexcept {
  return kind == OptionKind::Call ? "call" : "put";
}

namespace {

std::string got(double v) {
  std::ostringstream os;
  os.precision(17);
  os << " (got " << v << ")";
  return os.str();
}

}  // namespace

std::vector<ValidationIssue> check_params(const ModelParams& p, bool enforce_positivity) {
  std::vector<ValidationIssue> issues;
  auto require = [&](bool ok, const char* field, const char* rule, double value) {
    if (!ok) issues.push_back({field, std::string(field) + " must be " + rule + got(value)});
  };
  // The negated comparisons also reject NaN.
  require(std::isfinite(p.x) && p.x > 0.0, "x", "positive", p.x);
  require(std::isfinite(p.r) && p.r >= 0.0, "r", "non-negative", p.r);
  require(std::isfinite(p.sigma) && p.sigma > 0.0, "sigma", "positive", p.sigma);
  require(std::isfinite(p.beta) && p.beta >= 0.0, "beta", "non-negative", p.beta);
  require(std::isfinite(p.T) && p.T > 0.0, "T", "positive", p.T);

  if (enforce_positivity && issues.empty()) {
    const double bound = beta_max(p);
    if (p.beta > bound) {
      std::ostringstream os;
      os.precision(10);
      os << "beta must be <= beta_max = " << bound << " for positivity" << got(p.beta);
      issues.push_back({"beta", os.str()});
    }
  }
  return issues;
}

const ModelParams& validate_params(const ModelParams& params, bool enforce_positivity) {
  auto issues = check_params(params, enforce_positivity);
  if (!issues.empty()) throw ValidationError(std::move(issues));
  return params;
}

}  // namespace crisis
