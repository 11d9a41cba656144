#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace borm {

/// Weighted outcomes of a random vector: one row per realization, weights
/// normalized to unit total mass. Immutable after construction.
struct SampleSet {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;     // row-major, rows x cols
    std::vector<double> weights;  // strictly positive, sums to 1
    std::optional<std::uint64_t> seed;

    std::span<const double> row(std::size_t n) const {
        return {data.data() + n * cols, cols};
    }
};

/// Discrete distribution of a scalar limit-state value: strictly increasing
/// outcome values with positive weights summing to one.
struct OutcomeSeries {
    std::vector<double> values;
    std::vector<double> weights;

    std::size_t size() const { return values.size(); }
    double mean() const;
    double total_weight() const;
};

/// Sort/merge bookkeeping: merged_index[n] is the position in the series that
/// original input n was folded into.
struct SeriesBuild {
    OutcomeSeries series;
    std::vector<std::size_t> merged_index;
};

/// Scalar limit-state evaluator g(x, v).
using LimitStateFn =
    std::function<double(std::span<const double> x, std::span<const double> v)>;

/// Builds a SampleSet from raw rows and (optionally unnormalized) weights.
/// Pass an empty weight vector for the equal-weight convention.
SampleSet make_sample_set(std::vector<double> data, std::size_t rows, std::size_t cols,
                          std::vector<double> weights = {},
                          std::optional<std::uint64_t> seed = std::nullopt);

/// Reads a sample CSV: header row with columns v1..vd plus an optional
/// `weight` column, or a single column named `y` holding precomputed
/// limit-state outcomes. Weights are normalized on load.
SampleSet load_samples(const std::string& path,
                       const std::optional<std::string>& weight_column = std::nullopt);

/// True when the file (or in-memory set) is a single-column series of
/// precomputed outcomes.
bool is_precomputed_outcomes(const SampleSet& samples);

/// Sorts outcomes ascending and merges exactly equal values by summing their
/// weights. Deterministic for any input permutation.
OutcomeSeries make_outcome_series(std::span<const double> values,
                                  std::span<const double> weights);

/// Same as make_outcome_series but also records where each input landed.
SeriesBuild build_outcome_series(std::span<const double> values,
                                 std::span<const double> weights);

/// Evaluates g(x, v_n) over every sample row and assembles the series.
/// A row where the evaluator throws is reported with its row index.
OutcomeSeries evaluate_limit_state(const LimitStateFn& g, std::span<const double> x,
                                   const SampleSet& samples);

/// Evaluate-and-keep-mapping variant used by sensitivity analysis.
SeriesBuild evaluate_limit_state_mapped(const LimitStateFn& g, std::span<const double> x,
                                        const SampleSet& samples);

}  // namespace borm
