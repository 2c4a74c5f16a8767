#pragma once

namespace concord {

/// Standard normal density.
double norm_pdf(double x);

/// Standard normal distribution function, accurate to full double precision.
double norm_cdf(double x);

/// Inverse of the standard normal distribution function (Wichura's AS 241,
/// double-precision branch). Absolute error below 1e-15 on (0,1).
double norm_quantile(double p);

/// P(X <= x, Y <= y) for standard bivariate normal with correlation rho,
/// evaluated by adaptive 1-D quadrature of phi(s) * Phi((y - rho s)/sqrt(1-rho^2)).
/// Target absolute error 1e-10.
double biv_norm_cdf(double x, double y, double rho);

} // namespace concord
