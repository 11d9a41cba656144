#include "borm/tail.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "borm/bpoe.hpp"
#include "borm/errors.hpp"
#include "borm/special_functions.hpp"

namespace borm {

namespace {

constexpr double kGevXiEps = 1e-8;

void check_alpha(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError("tail formulas require alpha in (0, 1)");
}

// Shared kernel of the Gumbel-branch superquantile:
//   (gamma + alpha ln(-ln alpha) - li(alpha)) / (1 - alpha)
double gumbel_excess(double alpha) {
    return (euler_mascheroni() + alpha * std::log(-std::log(alpha)) - log_integral_li(alpha)) /
           (1.0 - alpha);
}

}  // namespace

TailIndex TailIndex::from_value(double tau) { return {tau, tau > std::numbers::e}; }

double closed_form_superquantile(const DistributionSpec& dist, double alpha) {
    check_alpha(alpha);
    switch (dist.family) {
        case Family::kNormal: {
            const double z = std::numbers::sqrt2 * inverse_erf(2.0 * alpha - 1.0);
            return dist.a + dist.b * std_normal_pdf(z) / (1.0 - alpha);
        }
        case Family::kExponential:
            return (-std::log1p(-alpha) + 1.0) / dist.a;
        case Family::kLognormal: {
            const double s = dist.b;
            const double e = std::erf(s / std::numbers::sqrt2 - inverse_erf(2.0 * alpha - 1.0));
            return 0.5 * std::exp(dist.a + 0.5 * s * s) * (1.0 + e) / (1.0 - alpha);
        }
        case Family::kWeibull: {
            const double k = dist.a;
            return dist.b / (1.0 - alpha) *
                   upper_incomplete_gamma(1.0 + 1.0 / k, -std::log1p(-alpha));
        }
        case Family::kGev: {
            const double xi = dist.c;
            if (std::fabs(xi) < kGevXiEps) return dist.a + dist.b * gumbel_excess(alpha);
            const double gl = lower_incomplete_gamma(1.0 - xi, std::log(1.0 / alpha));
            return dist.a + dist.b / (xi * (1.0 - alpha)) * (gl - (1.0 - alpha));
        }
    }
    throw DomainError("unreachable family");
}

TailIndex closed_form_tau(const DistributionSpec& dist, double alpha) {
    check_alpha(alpha);
    switch (dist.family) {
        case Family::kNormal: {
            const double z = std::numbers::sqrt2 * inverse_erf(2.0 * alpha - 1.0);
            const double standardized = std_normal_pdf(z) / (1.0 - alpha);
            return TailIndex::from_value((1.0 - alpha) / (1.0 - std_normal_cdf(standardized)));
        }
        case Family::kExponential:
            return TailIndex::from_value(std::numbers::e);
        case Family::kLognormal: {
            const double s = dist.b;
            const double e = std::erf(s / std::numbers::sqrt2 - inverse_erf(2.0 * alpha - 1.0));
            // standardized log of the superquantile; the location parameter
            // cancels, only s matters
            const double z = 0.5 * s + std::log(0.5 * (1.0 + e) / (1.0 - alpha)) / s;
            return TailIndex::from_value((1.0 - alpha) / (1.0 - std_normal_cdf(z)));
        }
        case Family::kWeibull: {
            const double k = dist.a;
            const double scaled =
                upper_incomplete_gamma(1.0 + 1.0 / k, -std::log1p(-alpha)) / (1.0 - alpha);
            return TailIndex::from_value((1.0 - alpha) / std::exp(-std::pow(scaled, k)));
        }
        case Family::kGev: {
            const double xi = dist.c;
            if (std::fabs(xi) < kGevXiEps) {
                const double inner = std::exp(-gumbel_excess(alpha));
                return TailIndex::from_value((1.0 - alpha) / (1.0 - std::exp(-inner)));
            }
            const double gl = lower_incomplete_gamma(1.0 - xi, std::log(1.0 / alpha));
            const double base = 1.0 + (gl - (1.0 - alpha)) / (1.0 - alpha);
            return TailIndex::from_value((1.0 - alpha) /
                                         (1.0 - std::exp(-std::pow(base, -1.0 / xi))));
        }
    }
    throw DomainError("unreachable family");
}

double assembled_tau(const DistributionSpec& dist, double alpha) {
    check_alpha(alpha);
    const double sq = closed_form_superquantile(dist, alpha);
    const double upper = 1.0 - distribution_cdf(dist, sq);
    if (!(upper > 0.0)) throw DomainError("assembled_tau: degenerate upper tail");
    return (1.0 - alpha) / upper;
}

double reference_tau(double pf) {
    if (!(pf >= 1e-6 && pf <= 0.5))
        throw DomainError("reference_tau: pf must lie in [1e-6, 0.5]");
    const double lp = std::log(pf);
    const auto lerp_log = [lp](double p_lo, double tau_lo, double p_hi, double tau_hi) {
        const double t = (lp - std::log(p_lo)) / (std::log(p_hi) - std::log(p_lo));
        return tau_lo + (tau_hi - tau_lo) * t;
    };
    if (pf < 0.01) return lerp_log(1e-6, 2.68, 0.01, 2.61);
    if (pf < 0.3) return lerp_log(0.01, 2.61, 0.3, 2.4);
    return lerp_log(0.3, 2.4, 0.5, 2.0);
}

double calibrate_target(double pf_target) {
    return std::min(1.0, reference_tau(pf_target) * pf_target);
}

TailIndex empirical_tau(const OutcomeSeries& series) {
    const double pf = estimate_pf(series);
    if (!(pf > 0.0)) throw DomainError("empirical_tau: undefined for zero failure probability");
    return TailIndex::from_value(estimate_bpoe(series) / pf);
}

}  // namespace borm
