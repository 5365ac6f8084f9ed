#pragma once

namespace crisis {

/// Standard normal CDF. Absolute error below 1e-15 across the real line.
/// Throws DomainError for NaN or infinite input.
double std_normal_cdf(double d);

/// Standard normal density.
double std_normal_pdf(double d) noexcept;

}  // namespace crisis
