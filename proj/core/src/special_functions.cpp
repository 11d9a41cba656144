#include "borm/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "borm/errors.hpp"

namespace borm {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kInvSqrt2Pi = 0.3989422804014326779399461;
constexpr double kEulerGamma = 0.5772156649015328606065121;

// Regularized lower incomplete gamma P(a,x) by its power series.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 500; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-17) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma Q(a,x) by the Lentz continued fraction.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double std_normal_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

double inverse_erf(double p) {
    if (!(p > -1.0 && p < 1.0)) throw DomainError("inverse_erf: argument must lie in (-1, 1)");
    if (p == 0.0) return 0.0;

    // Initial guess per Giles (2012), single-precision grade.
    double w = -std::log((1.0 - p) * (1.0 + p));
    double x;
    if (w < 5.0) {
        w -= 2.5;
        x = 2.81022636e-08;
        x = 3.43273939e-07 + x * w;
        x = -3.5233877e-06 + x * w;
        x = -4.39150654e-06 + x * w;
        x = 0.00021858087 + x * w;
        x = -0.00125372503 + x * w;
        x = -0.00417768164 + x * w;
        x = 0.246640727 + x * w;
        x = 1.50140941 + x * w;
        x *= p;
    } else {
        w = std::sqrt(w) - 3.0;
        x = -0.000200214257;
        x = 0.000100950558 + x * w;
        x = 0.00134934322 + x * w;
        x = -0.00367342844 + x * w;
        x = 0.00573950773 + x * w;
        x = -0.0076224613 + x * w;
        x = 0.00943887047 + x * w;
        x = 1.00167406 + x * w;
        x = 2.83297682 + x * w;
        x *= p;
    }
    // Newton polish: f(x) = erf(x) - p, f'(x) = 2/sqrt(pi) exp(-x^2).
    const double two_over_sqrt_pi = 2.0 / std::sqrt(std::numbers::pi);
    for (int it = 0; it < 3; ++it) {
        const double err = std::erf(x) - p;
        const double deriv = two_over_sqrt_pi * std::exp(-x * x);
        if (deriv == 0.0) break;
        x -= err / deriv;
    }
    return x;
}

double std_normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("std_normal_quantile: p must lie in (0, 1)");
    return kSqrt2 * inverse_erf(2.0 * p - 1.0);
}

double upper_incomplete_gamma(double a, double b) {
    if (!(a > 0.0) || !(b >= 0.0)) throw DomainError("upper_incomplete_gamma: need a > 0, b >= 0");
    const double gamma_a = std::tgamma(a);
    if (b == 0.0) return gamma_a;
    if (b < a + 1.0) return gamma_a * (1.0 - gamma_p_series(a, b));
    return gamma_a * gamma_q_cf(a, b);
}

double lower_incomplete_gamma(double a, double b) {
    if (!(a > 0.0) || !(b >= 0.0)) throw DomainError("lower_incomplete_gamma: need a > 0, b >= 0");
    if (b == 0.0) return 0.0;
    const double gamma_a = std::tgamma(a);
    if (b < a + 1.0) return gamma_a * gamma_p_series(a, b);
    return gamma_a * (1.0 - gamma_q_cf(a, b));
}

double expint_e1(double x) {
    if (!(x > 0.0)) throw DomainError("expint_e1: argument must be positive");
    if (x <= 1.0) {
        // E1(x) = -gamma - ln x + sum_{k>=1} (-1)^{k+1} x^k / (k k!)
        double sum = 0.0;
        double term = 1.0;
        for (int k = 1; k <= 60; ++k) {
            term *= -x / k;
            const double contrib = -term / k;
            sum += contrib;
            if (std::fabs(contrib) < 1e-18 * std::fabs(sum)) break;
        }
        return -kEulerGamma - std::log(x) + sum;
    }
    // Lentz continued fraction: E1(x) = exp(-x) / (x + 1/(1 + 1/(x + 2/(1 + ...))))
    const double tiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 300; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x);
}

double log_integral_li(double x) {
    if (!(x >= 0.0 && x < 1.0)) throw DomainError("log_integral_li: argument must lie in [0, 1)");
    if (x == 0.0) return 0.0;
    // li(x) = Ei(ln x) = -E1(-ln x) for 0 < x < 1.
    return -expint_e1(-std::log(x));
}

double euler_mascheroni() { return kEulerGamma; }

}  // namespace borm
