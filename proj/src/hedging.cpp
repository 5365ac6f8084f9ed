#include "crisisopt/hedging.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "crisisopt/errors.hpp"
#include "crisisopt/normal.hpp"

namespace crisis {

double delta_closed(const ModelParams& params, const OptionSpec& spec, double spot_t, double t, SolutionMode mode,
                    const GFunction& g) {
  if (!(t < params.T)) throw DomainError("delta: t must be before maturity");
  const PriceQuote q = price_at_t(params, {OptionKind::Call, spec.strike, t}, spot_t, mode, g);
  const double call_delta = std_normal_cdf(q.d1);
  return spec.kind == OptionKind::Call ? call_delta : call_delta - 1.0;
}

MonteCarloEstimate delta_mc(const ModelParams& params, const GFunction& g, const OptionSpec& spec, double spot_t,
                            double t, const SimConfig& config, SolutionMode mode) {
  validate_params(params);
  validate_option({spec.kind, spec.strike, t}, params);
  if (config.n_paths < 100) throw DomainError("Monte Carlo delta needs at least 100 paths");

  SimConfig forward = config;
  forward.grid = TimeGrid(t, params.T, config.grid.n_steps());
  forward.scheme = Scheme::ExactSolution;
  forward.solution_mode = mode;

  const bool call = spec.kind == OptionKind::Call;
  std::vector<double> samples(config.n_paths);
  for_each_path(params, g, forward, spot_t, [&](std::size_t p, const PathView& path) {
    const double terminal = path.s.back();
    const double factor = path.xi.back();  // xi_{t,T}
    // [K, inf) for calls, its complement for puts.
    if (call)
      samples[p] = terminal >= spec.strike ? factor : 0.0;
    else
      samples[p] = terminal < spec.strike ? -factor : 0.0;
  });

  double sum = 0.0;
  for (double v : samples) sum += v;
  const double n = static_cast<double>(samples.size());
  const double mean = sum / n;
  double sq = 0.0;
  for (double v : samples) sq += (v - mean) * (v - mean);
  const double discount = std::exp(-params.r * (params.T - t));
  return {discount * mean, discount * std::sqrt(sq / (n - 1.0) / n)};
}

ReplicationResult replicate(const ModelParams& params, const GFunction& g, const OptionSpec& spec,
                            const TimeGrid& grid, std::span<const double> path, SolutionMode mode,
                            const ReplicationOptions& options) {
  validate_params(params);
  validate_option({spec.kind, spec.strike, 0.0}, params);
  if (grid.t0() != 0.0 || grid.t1() != params.T)
    throw ConsistencyError("rebalance grid must span [0, T]");
  if (path.size() != grid.n_nodes()) throw ConsistencyError("path length does not match the rebalance grid");

  const bool use_mc = options.delta == DeltaMethod::MonteCarlo;
  if (use_mc && !options.inner) throw DomainError("Monte Carlo deltas need an inner simulation config");
  if (!use_mc && !g.is_exponential())
    throw DomainError("closed-form deltas need g(t) = e^{rt}; use Monte Carlo deltas");

  ReplicationResult result{{grid, {}, {}, {}, {}}, 0.0, first_nonpositive(path)};
  if (result.bankrupt_at == std::size_t{0}) throw DomainError("path starts at a non-positive level");
  const std::size_t last = result.bankrupt_at.value_or(grid.n_steps());

  auto delta_at = [&](std::size_t k) {
    const OptionSpec at{spec.kind, spec.strike, grid[k]};
    if (use_mc) return delta_mc(params, g, at, path[k], grid[k], *options.inner, mode).estimate;
    return delta_closed(params, at, path[k], grid[k], mode, g);
  };
  const double initial_capital =
      use_mc ? mc_price_at(params, g, {spec.kind, spec.strike, 0.0}, path[0], *options.inner, mode).value
             : price_at_t(params, {spec.kind, spec.strike, 0.0}, path[0], mode, g).value;

  HedgePortfolio& pf = result.portfolio;
  pf.spot.assign(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(last) + 1);
  pf.eta.resize(last + 1);
  pf.zeta.resize(last + 1);
  pf.value.resize(last + 1);

  double value = initial_capital;
  for (std::size_t k = 0; k <= last; ++k) {
    const double bond = std::exp(params.r * grid[k]);
    if (k > 0) value = pf.zeta[k - 1] * bond + pf.eta[k - 1] * path[k];
    pf.value[k] = value;
    if (k == last) {
      // Nothing left to rebalance: holdings stay as they were.
      pf.eta[k] = k > 0 ? pf.eta[k - 1] : 0.0;
      pf.zeta[k] = (value - pf.eta[k] * path[k]) / bond;
      break;
    }
    pf.eta[k] = delta_at(k);
    pf.zeta[k] = (value - pf.eta[k] * path[k]) / bond;
  }
  result.terminal_error = value - payoff(spec.kind, spec.strike, path[last]);
  return result;
}

ErrorStats hedging_error_stats(std::span<const double> errors) {
  if (errors.empty()) throw DomainError("hedging_error_stats: empty input");
  ErrorStats st;
  st.count = errors.size();
  const double n = static_cast<double>(errors.size());

  double sum = 0.0;
  double sum_abs = 0.0;
  for (double e : errors) {
    sum += e;
    sum_abs += std::abs(e);
  }
  st.mean = sum / n;
  st.mean_abs = sum_abs / n;
  double sq = 0.0;
  for (double e : errors) sq += (e - st.mean) * (e - st.mean);
  st.std = errors.size() > 1 ? std::sqrt(sq / (n - 1.0)) : 0.0;

  std::vector<double> sorted(errors.begin(), errors.end());
  std::sort(sorted.begin(), sorted.end());
  auto quantile = [&](double q) {
    const double pos = q * (n - 1.0);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
    return sorted[lo] + (pos - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
  };
  st.q01 = quantile(0.01);
  st.q99 = quantile(0.99);
  return st;
}

}  // namespace crisis
