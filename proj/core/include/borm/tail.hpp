#pragma once

#include "borm/distributions.hpp"
#include "borm/samples.hpp"

namespace borm {

/// Ratio of buffered to conventional failure probability. Values above e mark
/// a heavier-than-exponential upper tail.
struct TailIndex {
    double value = 1.0;
    bool heavy = false;  // value > e

    static TailIndex from_value(double tau);
};

/// Closed-form tail average beyond the alpha-quantile for the supported
/// families. Requires 0 < alpha < 1.
double closed_form_superquantile(const DistributionSpec& dist, double alpha);

/// Closed-form tail index at probability level alpha, from the dedicated
/// per-family expression. The exponential family returns exactly e.
TailIndex closed_form_tau(const DistributionSpec& dist, double alpha);

/// Tail index assembled from the superquantile and the family CDF:
///   (1 - alpha) / (1 - F(superquantile(alpha))).
/// Cross-check route for closed_form_tau.
double assembled_tau(const DistributionSpec& dist, double alpha);

/// Three-piece log-linear reference index over pf in [1e-6, 0.5], with knots
/// (1e-6, 2.68), (0.01, 2.61), (0.3, 2.4), (0.5, 2.0).
double reference_tau(double pf);

/// Buffered target matching a conventional target: reference_tau(pf) * pf,
/// capped at 1.
double calibrate_target(double pf_target);

/// Sample-based tail index: estimate_bpoe / estimate_pf. Requires positive
/// failure mass.
TailIndex empirical_tau(const OutcomeSeries& series);

}  // namespace borm
