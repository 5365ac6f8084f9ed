#include "crisisopt/normal.hpp"

#include <cmath>
#include <numbers>

#include "crisisopt/errors.hpp"

namespace crisis {

double std_normal_cdf(double d) {
  if (!std::isfinite(d)) throw DomainError("std_normal_cdf: input must be finite");
  // erfc keeps full relative precision in the lower tail, where 1 + erf would cancel.
  return 0.5 * std::erfc(-d * std::numbers::sqrt2 / 2.0);
}

double std_normal_pdf(double d) noexcept {
  return std::exp(-0.5 * d * d) * (std::numbers::inv_sqrtpi / std::numbers::sqrt2);
}

}  // namespace crisis
