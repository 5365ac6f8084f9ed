#pragma once

#include <string_view>

#include "crisisopt/gfunction.hpp"
#include "crisisopt/model.hpp"
#include "crisisopt/paths.hpp"

namespace crisis {

struct OptionSpec {
  OptionKind kind = OptionKind::Call;
  double strike = 100.0;
  double t = 0.0;  // valuation time, 0 <= t < T
};

/// Throws DomainError unless strike > 0 and 0 <= t < T.
void validate_option(const OptionSpec& spec, const ModelParams& params);

enum class PricingMethod { ClosedForm, MonteCarlo };

std::string_view to_string(PricingMethod method) noexcept;

/// A single option value together with the inputs the closed form saw.
///
/// For closed-form quotes d1 - d2 == sigma sqrt(T - t). Monte Carlo quotes
/// carry NaN in d1/d2 and the contract strike as effective_strike.
struct PriceQuote {
  OptionKind kind = OptionKind::Call;
  SolutionMode mode = SolutionMode::Corrected;
  PricingMethod method = PricingMethod::ClosedForm;
  double t = 0.0;
  double strike = 0.0;
  double value = 0.0;
  double d1 = 0.0;
  double d2 = 0.0;
  double effective_strike = 0.0;
  double effective_spot = 0.0;
  double std_error = 0.0;
};

double payoff(OptionKind kind, double strike, double terminal) noexcept;

/// Classical Black-Scholes value; the put comes from parity.
/// Throws DomainError for non-positive spot, strike, sigma or tau.
PriceQuote bs_price(double spot, double strike, double r, double sigma, double tau, OptionKind kind);

// Closed forms below exist only for g(t) = e^{rt}; any other g throws
// DomainError (use mc_price instead).

/// Premium at t = 0 of a call with strike K, priced as BS with the shifted
/// strike K' = K + (beta/sigma) e^{rT}. Paper mode uses spot x; Corrected mode
/// uses spot x + beta/sigma (the exact law of the corrected solution).
PriceQuote call_premium(const ModelParams& params, const OptionSpec& spec, SolutionMode mode,
                        const GFunction& g = GFunction::exponential());

/// P = C + K e^{-rT} - x, with C the same-mode call premium.
PriceQuote put_premium(const ModelParams& params, const OptionSpec& spec, SolutionMode mode,
                       const GFunction& g = GFunction::exponential());

/// Value at time spec.t given the observed level spot_t.
///   Paper:     BS(S_t, K + (beta/sigma) e^{r(T-t)}, T - t)
///   Corrected: BS(S_t + (beta/sigma) e^{rt}, K + (beta/sigma) e^{rT}, T - t)
/// Puts are C + K e^{-r(T-t)} - S_t in both modes.
PriceQuote price_at_t(const ModelParams& params, const OptionSpec& spec, double spot_t, SolutionMode mode,
                      const GFunction& g = GFunction::exponential());

/// Discounted Monte Carlo mean of the payoff over exact-solution terminal
/// values started at (0, x). Works for any g. config.n_paths must be >= 100;
/// the forward grid is [0, T] with config.grid.n_steps() steps.
PriceQuote mc_price(const ModelParams& params, const GFunction& g, const OptionSpec& spec, const SimConfig& config,
                    SolutionMode mode);

/// As mc_price, restarted from the observed state (spec.t, spot_t). In Paper
/// mode the restart is a fresh problem of horizon T - t with x = spot_t.
PriceQuote mc_price_at(const ModelParams& params, const GFunction& g, const OptionSpec& spec, double spot_t,
                       const SimConfig& config, SolutionMode mode);

}  // namespace crisis
