#pragma once

#include <string>

namespace borm {

enum class Family { kNormal, kExponential, kLognormal, kWeibull, kGev };

/// Parametric family tag plus parameters, used by the closed-form
/// superquantile and tail-index formulas.
///   Normal(mu, sigma), Exponential(rate), Lognormal(mu_log, s_log),
///   Weibull(shape k, scale lambda), GEV(location mu, scale s, shape xi).
struct DistributionSpec {
    Family family = Family::kNormal;
    double a = 0.0;  // mu / rate / mu_log / k / mu
    double b = 1.0;  // sigma / - / s_log / lambda / s
    double c = 0.0;  // GEV shape xi

    static DistributionSpec normal(double mu, double sigma);
    static DistributionSpec exponential(double rate);
    static DistributionSpec lognormal(double mu_log, double s_log);
    static DistributionSpec weibull(double shape, double scale);
    static DistributionSpec gev(double location, double scale, double shape);

    std::string describe() const;
};

/// Parses "normal", "exponential", "lognormal", "weibull", "gev".
Family parse_family(const std::string& name);

double distribution_cdf(const DistributionSpec& dist, double y);

/// Quantile transform; u in (0, 1). Used for reproducible inverse-CDF
/// sampling and for quadrature oracles.
double distribution_quantile(const DistributionSpec& dist, double u);

double distribution_mean(const DistributionSpec& dist);

}  // namespace borm
