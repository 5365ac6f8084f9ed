#include "crisisopt/pricing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "crisisopt/errors.hpp"
#include "crisisopt/normal.hpp"

namespace crisis {

std::string_view to_string(PricingMethod method) noexcept {
  return method == PricingMethod::ClosedForm ? "closed" : "mc";
}

void validate_option(const OptionSpec& spec, const ModelParams& params) {
  if (!(std::isfinite(spec.strike) && spec.strike > 0.0))
    throw DomainError("K must be positive (got " + std::to_string(spec.strike) + ")");
  if (!(spec.t >= 0.0 && spec.t < params.T))
    throw DomainError("t must lie in [0, T) (got " + std::to_string(spec.t) + ")");
}

double payoff(OptionKind kind, double strike, double terminal) noexcept {
  return kind == OptionKind::Call ? std::max(terminal - strike, 0.0) : std::max(strike - terminal, 0.0);
}

PriceQuote bs_price(double spot, double strike, double r, double sigma, double tau, OptionKind kind) {
  if (!(spot > 0.0)) throw DomainError("spot must be positive");
  if (!(strike > 0.0)) throw DomainError("strike must be positive");
  if (!(sigma > 0.0)) throw DomainError("sigma must be positive");
  if (!(tau > 0.0)) throw DomainError("time to maturity must be positive");

  const double vol = sigma * std::sqrt(tau);
  const double d1 = (std::log(spot / strike) + (r + 0.5 * sigma * sigma) * tau) / vol;
  const double d2 = d1 - vol;
  const double discounted_strike = strike * std::exp(-r * tau);
  const double call = spot * std_normal_cdf(d1) - discounted_strike * std_normal_cdf(d2);

  PriceQuote q;
  q.kind = kind;
  q.d1 = d1;
  q.d2 = d2;
  q.strike = strike;
  q.effective_strike = strike;
  q.effective_spot = spot;
  q.value = kind == OptionKind::Call ? std::max(call, 0.0) : std::max(call + discounted_strike - spot, 0.0);
  return q;
}

namespace {

void require_exponential(const GFunction& g) {
  if (!g.is_exponential())
    throw DomainError("closed form exists only for g(t) = e^{rt}; use the Monte Carlo pricer");
}

// Shared body of the closed forms: value at spec.t given the observed level.
PriceQuote closed_form(const ModelParams& params, const OptionSpec& spec, double spot_t, SolutionMode mode) {
  validate_params(params);
  validate_option(spec, params);
  const double tau = params.T - spec.t;
  const double coupling = params.beta / params.sigma;

  double spot = spot_t;
  double strike = spec.strike;
  if (mode == SolutionMode::Paper) {
    strike += coupling * std::exp(params.r * tau);
  } else {
    spot += coupling * std::exp(params.r * spec.t);
    strike += coupling * std::exp(params.r * params.T);
  }

  PriceQuote q = bs_price(spot, strike, params.r, params.sigma, tau, OptionKind::Call);
  if (spec.kind == OptionKind::Put) {
    // Parity against the contract strike and the observed level, not the shifted
    // inputs. Not clamped: in Paper mode this can dip below zero (by up to
    // beta/sigma) for far out-of-the-money puts, and clamping would break parity.
    q.value = q.value + spec.strike * std::exp(-params.r * tau) - spot_t;
  }
  q.kind = spec.kind;
  q.mode = mode;
  q.method = PricingMethod::ClosedForm;
  q.t = spec.t;
  q.strike = spec.strike;
  return q;
}

}  // namespace

PriceQuote call_premium(const ModelParams& params, const OptionSpec& spec, SolutionMode mode, const GFunction& g) {
  require_exponential(g);
  if (spec.t != 0.0) throw DomainError("premium is the t = 0 price; use price_at_t");
  return closed_form(params, {OptionKind::Call, spec.strike, 0.0}, params.x, mode);
}

PriceQuote put_premium(const ModelParams& params, const OptionSpec& spec, SolutionMode mode, const GFunction& g) {
  require_exponential(g);
  if (spec.t != 0.0) throw DomainError("premium is the t = 0 price; use price_at_t");
  return closed_form(params, {OptionKind::Put, spec.strike, 0.0}, params.x, mode);
}

PriceQuote price_at_t(const ModelParams& params, const OptionSpec& spec, double spot_t, SolutionMode mode,
                      const GFunction& g) {
  require_exponential(g);
  if (!std::isfinite(spot_t)) throw DomainError("observed spot must be finite");
  return closed_form(params, spec, spot_t, mode);
}

PriceQuote mc_price(const ModelParams& params, const GFunction& g, const OptionSpec& spec, const SimConfig& config,
                    SolutionMode mode) {
  if (spec.t != 0.0) throw DomainError("mc_price values at t = 0; use mc_price_at");
  return mc_price_at(params, g, spec, params.x, config, mode);
}

PriceQuote mc_price_at(const ModelParams& params, const GFunction& g, const OptionSpec& spec, double spot_t,
                       const SimConfig& config, SolutionMode mode) {
  validate_params(params);
  validate_option(spec, params);
  if (config.n_paths < 100) throw DomainError("Monte Carlo pricing needs at least 100 paths");

  SimConfig forward = config;
  forward.grid = TimeGrid(spec.t, params.T, config.grid.n_steps());
  forward.scheme = Scheme::ExactSolution;
  forward.solution_mode = mode;

  std::vector<double> payoffs(config.n_paths);
  for_each_path(params, g, forward, spot_t, [&](std::size_t p, const PathView& path) {
    payoffs[p] = payoff(spec.kind, spec.strike, path.s.back());
  });

  // Fixed summation order keeps the estimate independent of the worker count.
  double sum = 0.0;
  for (double v : payoffs) sum += v;
  const double n = static_cast<double>(payoffs.size());
  const double mean = sum / n;
  double sq = 0.0;
  for (double v : payoffs) sq += (v - mean) * (v - mean);
  const double discount = std::exp(-params.r * (params.T - spec.t));

  PriceQuote q;
  q.kind = spec.kind;
  q.mode = mode;
  q.method = PricingMethod::MonteCarlo;
  q.t = spec.t;
  q.strike = spec.strike;
  q.value = discount * mean;
  q.d1 = std::numeric_limits<double>::quiet_NaN();
  q.d2 = std::numeric_limits<double>::quiet_NaN();
  q.effective_strike = spec.strike;
  q.effective_spot = spot_t;
  q.std_error = discount * std::sqrt(sq / (n - 1.0)) / std::sqrt(n);
  return q;
}

}  // namespace crisis
