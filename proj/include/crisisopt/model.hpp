#pragma once

#include <string_view>
#include <vector>

#include "crisisopt/errors.hpp"

namespace crisis {

/// Market and model constants for dS = rS dt + (sigma S + beta g(t)) dW.
/// Rates are per year, times in years.
struct ModelParams {
  double x = 100.0;     // initial price level
  double r = 0.05;      // risk-free rate
  double sigma = 0.2;   // base volatility
  double beta = 0.0;    // crisis coupling
  double T = 1.0;       // maturity
};

/// Which closed-form solution of the SDE to use.
///
/// `Paper` evaluates the uncorrected solution formula. It drops the integration
/// constant (beta/sigma) g(0), so S_0 = x - (beta/sigma) g(0) instead of x.
/// `Corrected` restores the constant and satisfies S_0 = x.
enum class SolutionMode { Paper, Corrected };

enum class OptionKind { Call, Put };

std::string_view to_string(SolutionMode mode) noexcept;
std::string_view to_string(OptionKind kind) noexcept;

/// Returns every violated invariant of `params`; empty when valid. With
/// `enforce_positivity`, beta must also not exceed beta_max(params).
std::vector<ValidationIssue> check_params(const ModelParams& params, bool enforce_positivity = false);

/// Returns `params` unchanged, or throws ValidationError listing all issues.
const ModelParams& validate_params(const ModelParams& params, bool enforce_positivity = false);

}  // namespace crisis
