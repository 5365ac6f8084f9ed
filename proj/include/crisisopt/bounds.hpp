#pragma once

#include "crisisopt/model.hpp"

namespace crisis {

struct PriceBand {
  double lower;
  double upper;
};

/// Three-sigma band for S_t under g(t) = e^{rt}:
///   x e^{(r - sigma^2/2) t -/+ 3 sigma sqrt(t)} - (beta/sigma) e^{rt}.
/// Pointwise coverage is P(|Z| <= 3) ~ 0.9973. Throws DomainError unless 0 <= t <= T.
PriceBand price_bounds(const ModelParams& params, double t);

/// Largest beta that keeps the lower band edge positive on [0, T]:
///   x sigma exp(-(sigma^2 T / 2 + 3 sigma sqrt(T))).
double beta_max(const ModelParams& params);

}  // namespace crisis
