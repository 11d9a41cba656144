#pragma once

namespace borm {

/// Standard normal density.
double std_normal_pdf(double x);

/// Standard normal distribution function, accurate in both tails.
double std_normal_cdf(double x);

/// Standard normal quantile (inverse of std_normal_cdf).
double std_normal_quantile(double p);

/// Inverse of erf on (-1, 1). Rational initial guess polished by Newton
/// steps; relative accuracy near machine precision away from the endpoints.
double inverse_erf(double p);

/// Upper incomplete gamma integral over [b, inf) of t^(a-1) e^(-t) dt,
/// unnormalized. Requires a > 0, b >= 0.
double upper_incomplete_gamma(double a, double b);

/// Lower incomplete gamma integral over [0, b], unnormalized.
double lower_incomplete_gamma(double a, double b);

/// Logarithmic integral li(x) = int_0^x dt/ln t for x in [0, 1).
double log_integral_li(double x);

/// The Euler-Mascheroni constant.
double euler_mascheroni();

/// Exponential integral E1(x) for x > 0 (series for small x, continued
/// fraction otherwise).
double expint_e1(double x);

}  // namespace borm
