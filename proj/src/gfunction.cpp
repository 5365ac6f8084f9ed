#include "crisisopt/gfunction.hpp"

#include <cmath>
#include <string>

#include "crisisopt/errors.hpp"

namespace crisis {
namespace {

void check_time(const ModelParams& params, double t) {
  if (!(t >= 0.0 && t <= params.T))
    throw DomainError("g: t must lie in [0, T] (got " + std::to_string(t) + ")");
}

}  // namespace

double g_eval(const GFunction& g, const ModelParams& params, double t) {
  check_time(params, t);
  if (g.is_exponential()) return std::exp(params.r * t);
  return g.A + g.B * std::exp(g.alpha * t) * std::sin(g.omega * t);
}

double g_deriv(const GFunction& g, const ModelParams& params, double t) {
  check_time(params, t);
  if (g.is_exponential()) return params.r * std::exp(params.r * t);
  return g.B * std::exp(g.alpha * t) * (g.alpha * std::sin(g.omega * t) + g.omega * std::cos(g.omega * t));
}

double g_drift_gap(const GFunction& g, const ModelParams& params, double t) {
  check_time(params, t);
  if (g.is_exponential()) return 0.0;
  return params.r * g_eval(g, params, t) - g_deriv(g, params, t);
}

}  // namespace crisis
