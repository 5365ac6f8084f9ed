#include "crisisopt/bounds.hpp"

#include <cmath>
#include <string>

namespace crisis {

PriceBand price_bounds(const ModelParams& params, double t) {
  validate_params(params);
  if (!(t >= 0.0 && t <= params.T))
    throw DomainError("bounds: t must lie in [0, T] (got " + std::to_string(t) + ")");
  const double drift = (params.r - 0.5 * params.sigma * params.sigma) * t;
  const double spread = 3.0 * params.sigma * std::sqrt(t);
  const double shift = params.beta / params.sigma * std::exp(params.r * t);
  return {params.x * std::exp(drift - spread) - shift, params.x * std::exp(drift + spread) - shift};
}

double beta_max(const ModelParams& params) {
  const double s = params.sigma;
  return params.x * s * std::exp(-(0.5 * s * s * params.T + 3.0 * s * std::sqrt(params.T)));
}

}  // namespace crisis
