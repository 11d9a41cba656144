#include "borm/distributions.hpp"

#include <cmath>
#include <sstream>

#include "borm/errors.hpp"
#include "borm/special_functions.hpp"

namespace borm {

namespace {

// |xi| below this is treated as the Gumbel branch of the GEV family; the
// general-xi expressions lose all precision as xi -> 0.
constexpr double kGevXiEps = 1e-8;

void require(bool ok, const char* message) {
    if (!ok) throw DomainError(message);
}

}  // namespace

DistributionSpec DistributionSpec::normal(double mu, double sigma) {
    require(sigma > 0.0, "normal: sigma must be positive");
    return {Family::kNormal, mu, sigma, 0.0};
}

DistributionSpec DistributionSpec::exponential(double rate) {
    require(rate > 0.0, "exponential: rate must be positive");
    return {Family::kExponential, rate, 0.0, 0.0};
}

DistributionSpec DistributionSpec::lognormal(double mu_log, double s_log) {
    require(s_log > 0.0, "lognormal: s must be positive");
    return {Family::kLognormal, mu_log, s_log, 0.0};
}

DistributionSpec DistributionSpec::weibull(double shape, double scale) {
    require(shape > 0.0 && scale > 0.0, "weibull: shape and scale must be positive");
    return {Family::kWeibull, shape, scale, 0.0};
}

DistributionSpec DistributionSpec::gev(double location, double scale, double shape) {
    require(scale > 0.0, "gev: scale must be positive");
    require(shape < 1.0, "gev: shape must be < 1 for a finite tail mean");
    return {Family::kGev, location, scale, shape};
}

std::string DistributionSpec::describe() const {
    std::ostringstream os;
    switch (family) {
        case Family::kNormal: os << "normal(mu=" << a << ",sigma=" << b << ")"; break;
        case Family::kExponential: os << "exponential(rate=" << a << ")"; break;
        case Family::kLognormal: os << "lognormal(mu=" << a << ",s=" << b << ")"; break;
        case Family::kWeibull: os << "weibull(k=" << a << ",lambda=" << b << ")"; break;
        case Family::kGev: os << "gev(mu=" << a << ",s=" << b << ",xi=" << c << ")"; break;
    }
    return os.str();
}

Family parse_family(const std::string& name) {
    if (name == "normal") return Family::kNormal;
    if (name == "exponential") return Family::kExponential;
    if (name == "lognormal") return Family::kLognormal;
    if (name == "weibull") return Family::kWeibull;
    if (name == "gev") return Family::kGev;
    throw DomainError("unknown distribution family: " + name);
}

double distribution_cdf(const DistributionSpec& dist, double y) {
    switch (dist.family) {
        case Family::kNormal:
            return std_normal_cdf((y - dist.a) / dist.b);
        case Family::kExponential:
            return y <= 0.0 ? 0.0 : 1.0 - std::exp(-dist.a * y);
        case Family::kLognormal:
            return y <= 0.0 ? 0.0 : std_normal_cdf((std::log(y) - dist.a) / dist.b);
        case Family::kWeibull:
            return y <= 0.0 ? 0.0 : 1.0 - std::exp(-std::pow(y / dist.b, dist.a));
        case Family::kGev: {
            const double z = (y - dist.a) / dist.b;
            if (std::fabs(dist.c) < kGevXiEps) return std::exp(-std::exp(-z));
            const double t = 1.0 + dist.c * z;
            if (t <= 0.0) return dist.c > 0.0 ? 0.0 : 1.0;
            return std::exp(-std::pow(t, -1.0 / dist.c));
        }
    }
    throw DomainError("unreachable family");
}

double distribution_quantile(const DistributionSpec& dist, double u) {
    require(u > 0.0 && u < 1.0, "distribution_quantile: u must lie in (0, 1)");
    switch (dist.family) {
        case Family::kNormal:
            return dist.a + dist.b * std_normal_quantile(u);
        case Family::kExponential:
            return -std::log1p(-u) / dist.a;
        case Family::kLognormal:
            return std::exp(dist.a + dist.b * std_normal_quantile(u));
        case Family::kWeibull:
            return dist.b * std::pow(-std::log1p(-u), 1.0 / dist.a);
        case Family::kGev: {
            if (std::fabs(dist.c) < kGevXiEps) return dist.a - dist.b * std::log(-std::log(u));
            return dist.a + dist.b * (std::pow(-std::log(u), -dist.c) - 1.0) / dist.c;
        }
    }
    throw DomainError("unreachable family");
}

double distribution_mean(const DistributionSpec& dist) {
    switch (dist.family) {
        case Family::kNormal:
            return dist.a;
        case Family::kExponential:
            return 1.0 / dist.a;
        case Family::kLognormal:
            return std::exp(dist.a + 0.5 * dist.b * dist.b);
        case Family::kWeibull:
            return dist.b * std::tgamma(1.0 + 1.0 / dist.a);
        case Family::kGev: {
            if (std::fabs(dist.c) < kGevXiEps) return dist.a + dist.b * euler_mascheroni();
            return dist.a + dist.b * (std::tgamma(1.0 - dist.c) - 1.0) / dist.c;
        }
    }
    throw DomainError("unreachable family");
}

}  // namespace borm
