#pragma once

// Quantile functions used to drive the Gibbs samplers by inversion.

namespace cudtaus {

/// Standard normal quantile (Wichura's AS 241, double precision form).
/// Throws std::domain_error unless 0 < u < 1.
double inv_normal_cdf(double u);

/// Standard normal CDF.
double normal_cdf(double x);

/// Regularized incomplete gamma functions P(a, x) and Q(a, x) = 1 - P(a, x).
/// Throws std::domain_error for a <= 0 or x < 0.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

/// x with P(shape, rate * x) = u. Bracketed Newton iteration on the
/// standardized variable; relative accuracy 1e-9 or better. Throws
/// std::domain_error on bad arguments and std::runtime_error if the
/// iteration fails to converge.
double inv_gamma_cdf(double u, double shape, double rate);

}  // namespace cudtaus
