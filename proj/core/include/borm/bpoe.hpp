#pragma once

#include <cstddef>
#include <optional>

#include "borm/samples.hpp"

namespace borm {

/// Index/threshold pair splitting a series into the negative head and the
/// tail whose probability-weighted sum is positive. Indices are 1-based to
/// match the usual ordering n = 1..N of a sorted series.
struct NStarResult {
    std::size_t index = 0;  // in {1, ..., N-1}
    double threshold = 0.0; // series value at the index, strictly negative
};

/// Smallest value whose cumulative weight reaches alpha. Requires
/// 0 < alpha <= 1.
double quantile(const OutcomeSeries& series, double alpha);

/// Tail average beyond the alpha-quantile:
///   q_alpha + (1 / (1 - alpha)) * sum_n p_n * max(y_n - q_alpha, 0)
/// Requires 0 < alpha < 1.
double superquantile(const OutcomeSeries& series, double alpha);

/// Probability mass strictly above zero.
double estimate_pf(const OutcomeSeries& series);

/// Scans from the top of the series for the largest index n* whose inclusive
/// tail sum sum_{n>=n*} p_n y_n is <= 0 while the strict tail sum
/// sum_{n>n*} p_n y_n is >= 0 (boundary equalities accepted; the estimator is
/// continuous there). Returns nullopt for pathological series, e.g. all
/// values negative, where the caller falls back to the defining cases.
std::optional<NStarResult> find_nstar(const OutcomeSeries& series);

/// Buffered failure probability of the series. Defined cases: 0 when no mass
/// lies above zero, 1 when the mean is nonnegative (and failure mass exists),
/// otherwise the tail-ratio formula at n*:
///   sum_{n>n*} p_n (y_n - y_{n*}) / (-y_{n*}).
/// The result always lies in [estimate_pf, 1].
double estimate_bpoe(const OutcomeSeries& series);

}  // namespace borm
