#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "crisisopt/pricing.hpp"

namespace crisis {

/// Closed-form hedge ratio for g(t) = e^{rt}: Phi(d1) of the same-mode
/// price_at_t inputs for a call, Phi(d1) - 1 for a put.
double delta_closed(const ModelParams& params, const OptionSpec& spec, double spot_t, double t, SolutionMode mode,
                    const GFunction& g = GFunction::exponential());

struct MonteCarloEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
};

/// Hedge ratio as a conditional expectation, valid for any g:
///   call  e^{-r(T-t)} E[ xi_{t,T} 1{S_T >= K} | S_t ]
///   put  -e^{-r(T-t)} E[ xi_{t,T} 1{S_T <  K} | S_t ]
/// using fresh forward simulations from (t, S_t) in the chosen mode. The two
/// indicators are complementary, so call - put equals the discounted factor
/// mean on identical draws. config.n_paths must be >= 100.
MonteCarloEstimate delta_mc(const ModelParams& params, const GFunction& g, const OptionSpec& spec, double spot_t,
                            double t, const SimConfig& config, SolutionMode mode);

/// Replication state at every rebalance node. At node k the portfolio holds
/// eta[k] units of stock and zeta[k] units of the bond A_t = e^{rt};
/// value[k] = zeta[k] A(t_k) + eta[k] spot[k].
struct HedgePortfolio {
  TimeGrid rebalance_times;
  std::vector<double> spot;
  std::vector<double> eta;
  std::vector<double> zeta;
  std::vector<double> value;
};

enum class DeltaMethod { ClosedForm, MonteCarlo };

struct ReplicationOptions {
  DeltaMethod delta = DeltaMethod::ClosedForm;
  /// Inner simulation settings when delta == MonteCarlo (also used for the
  /// initial capital). Required in that case.
  std::optional<SimConfig> inner;
};

struct ReplicationResult {
  HedgePortfolio portfolio;
  /// V - payoff at maturity, or at the bankruptcy node if the path hit S <= 0.
  double terminal_error = 0.0;
  std::optional<std::size_t> bankrupt_at;
};

/// Discrete self-financing replication along one asset path sampled on
/// `grid` (which must span [0, T]). The initial capital is the same-mode price
/// at the path's first level; holdings are rebalanced at every node and carried
/// unchanged to the next, with the bond leg accruing at e^{rh}.
ReplicationResult replicate(const ModelParams& params, const GFunction& g, const OptionSpec& spec,
                            const TimeGrid& grid, std::span<const double> path, SolutionMode mode,
                            const ReplicationOptions& options = {});

struct ErrorStats {
  std::size_t count = 0;
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation (n - 1); 0 for a single value
  double mean_abs = 0.0;
  double q01 = 0.0;  // linear-interpolated quantiles
  double q99 = 0.0;
};

/// Throws DomainError on empty input.
ErrorStats hedging_error_stats(std::span<const double> errors);

}  // namespace crisis
