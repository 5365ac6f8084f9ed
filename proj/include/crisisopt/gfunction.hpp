#pragma once

#include "crisisopt/model.hpp"

namespace crisis {

/// The deterministic coupling g(t) in the diffusion term. Two closed families
/// so that g' stays analytic:
///   Exponential       g(t) = e^{rt}, r taken from ModelParams
///   DampedOscillator  g(t) = A + B e^{alpha t} sin(omega t)
struct GFunction {
  enum class Kind { Exponential, DampedOscillator };

  Kind kind = Kind::Exponential;
  double A = 0.0;
  double B = 0.0;
  double alpha = 0.0;
  double omega = 0.0;

  static GFunction exponential() noexcept { return {}; }
  static GFunction damped_oscillator(double A, double B, double alpha, double omega) noexcept {
    return {Kind::DampedOscillator, A, B, alpha, omega};
  }

  bool is_exponential() const noexcept { return kind == Kind::Exponential; }
};

/// g(t) for 0 <= t <= T. Throws DomainError outside that range.
double g_eval(const GFunction& g, const ModelParams& params, double t);

/// Analytic g'(t) for 0 <= t <= T.
double g_deriv(const GFunction& g, const ModelParams& params, double t);

/// r g(t) - g'(t), the integrand weight in the closed-form solution. Exactly
/// zero for the exponential family.
double g_drift_gap(const GFunction& g, const ModelParams& params, double t);

}  // namespace crisis
