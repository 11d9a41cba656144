#include "borm/bpoe.hpp"

#include <algorithm>
#include <cmath>

#include "borm/errors.hpp"

namespace borm {

double quantile(const OutcomeSeries& series, double alpha) {
    if (!(alpha > 0.0 && alpha <= 1.0)) throw DomainError("quantile: alpha must lie in (0, 1]");
    double cum = 0.0;
    const std::size_t m = series.size();
    for (std::size_t i = 0; i < m; ++i) {
        cum += series.weights[i];
        if (cum >= alpha - 1e-15) return series.values[i];
    }
    return series.values.back();
}

double superquantile(const OutcomeSeries& series, double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw DomainError("superquantile: alpha must lie in (0, 1)");
    const double q = quantile(series, alpha);
    double excess = 0.0;
    // series is sorted ascending; only values above q contribute
    for (std::size_t i = series.size(); i-- > 0;) {
        if (series.values[i] <= q) break;
        excess += series.weights[i] * (series.values[i] - q);
    }
    return q + excess / (1.0 - alpha);
}

double estimate_pf(const OutcomeSeries& series) {
    double pf = 0.0;
    for (std::size_t i = series.size(); i-- > 0;) {
        if (series.values[i] <= 0.0) break;
        pf += series.weights[i];
    }
    return pf;
}

std::optional<NStarResult> find_nstar(const OutcomeSeries& series) {
    const std::size_t m = series.size();
    if (m < 2) return std::nullopt;
    // strict tail sum over n > n*, built incrementally from the top
    double tail = series.weights[m - 1] * series.values[m - 1];
    for (std::size_t idx = m - 1; idx-- > 0;) {
        // candidate n* = idx+1 in 1-based terms; tail currently sums n > n*
        const double inclusive = tail + series.weights[idx] * series.values[idx];
        if (inclusive <= 0.0 && tail >= 0.0 && series.values[idx] < 0.0) {
            return NStarResult{idx + 1, series.values[idx]};
        }
        tail = inclusive;
    }
    return std::nullopt;
}

double estimate_bpoe(const OutcomeSeries& series) {
    const double pf = estimate_pf(series);
    if (pf == 0.0) return 0.0;
    if (series.mean() >= 0.0) return 1.0;

    const auto nstar = find_nstar(series);
    if (!nstar) {
        // Mean < 0 with positive failure mass always admits a split; an
        // absent split here can only be a degenerate rounding artifact.
        return 1.0;
    }
    const double y_star = nstar->threshold;
    double acc = 0.0;
    for (std::size_t i = nstar->index; i < series.size(); ++i) {
        acc += series.weights[i] * (series.values[i] - y_star);
    }
    const double pbf = acc / (-y_star);
    return std::clamp(pbf, pf, 1.0);
}

}  // namespace borm
