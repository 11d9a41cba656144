#include "borm/samples.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "borm/errors.hpp"

namespace borm {

namespace {

constexpr double kWeightSumTol = 1e-12;

void normalize_weights(std::vector<double>& w) {
    double sum = 0.0;
    for (double v : w) {
        if (!(v > 0.0)) throw DomainError("sample weights must be strictly positive");
        if (!std::isfinite(v)) throw DomainError("sample weights must be finite");
        sum += v;
    }
    if (!(sum > 0.0)) throw DomainError("sample weights sum to zero");
    for (double& v : w) v /= sum;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) {
        // trim surrounding whitespace
        const auto first = field.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            fields.emplace_back();
        } else {
            const auto last = field.find_last_not_of(" \t\r");
            fields.push_back(field.substr(first, last - first + 1));
        }
    }
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

double parse_number(const std::string& text, std::size_t line_no) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument("trailing characters");
        if (!std::isfinite(v)) throw DomainError("non-finite value");
        return v;
    } catch (const DomainError&) {
        throw ParseError("non-finite value at line " + std::to_string(line_no) + ": '" + text + "'");
    } catch (const std::exception&) {
        throw ParseError("malformed number at line " + std::to_string(line_no) + ": '" + text + "'");
    }
}

}  // namespace

double OutcomeSeries::mean() const {
    double m = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) m += weights[i] * values[i];
    return m;
}

double OutcomeSeries::total_weight() const {
    return std::accumulate(weights.begin(), weights.end(), 0.0);
}

SampleSet make_sample_set(std::vector<double> data, std::size_t rows, std::size_t cols,
                          std::vector<double> weights, std::optional<std::uint64_t> seed) {
    if (rows == 0 || cols == 0) throw DomainError("sample set must have at least one row and column");
    if (data.size() != rows * cols) throw DomainError("sample data size does not match dimensions");
    for (double v : data) {
        if (!std::isfinite(v)) throw DomainError("sample values must be finite");
    }
    if (weights.empty()) {
        weights.assign(rows, 1.0 / static_cast<double>(rows));
    } else {
        if (weights.size() != rows) throw DomainError("weight count does not match row count");
        normalize_weights(weights);
    }
    SampleSet s;
    s.rows = rows;
    s.cols = cols;
    s.data = std::move(data);
    s.weights = std::move(weights);
    s.seed = seed;
    return s;
}

SampleSet load_samples(const std::string& path, const std::optional<std::string>& weight_column) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open sample file: " + path);

    std::string line;
    if (!std::getline(in, line)) throw ParseError("empty sample file: " + path);
    if (!line.empty() && line.front() == '\xEF') line.erase(0, 3);  // strip UTF-8 BOM

    const std::vector<std::string> header = split_csv_line(line);
    if (header.empty()) throw ParseError("missing header row in " + path);

    std::ptrdiff_t weight_idx = -1;
    const std::string weight_name = weight_column.value_or("weight");
    std::vector<std::size_t> value_cols;
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == weight_name) {
            if (weight_idx >= 0) throw ParseError("duplicate weight column in " + path);
            weight_idx = static_cast<std::ptrdiff_t>(i);
        } else {
            value_cols.push_back(i);
        }
    }
    if (weight_column && weight_idx < 0)
        throw ParseError("weight column '" + weight_name + "' not found in " + path);
    if (value_cols.empty()) throw ParseError("no value columns in " + path);

    std::vector<double> data;
    std::vector<double> weights;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto fields = split_csv_line(line);
        if (fields.size() != header.size())
            throw ParseError("row " + std::to_string(line_no) + " has " +
                             std::to_string(fields.size()) + " fields, expected " +
                             std::to_string(header.size()));
        for (std::size_t c : value_cols) data.push_back(parse_number(fields[c], line_no));
        if (weight_idx >= 0) {
            const double w = parse_number(fields[static_cast<std::size_t>(weight_idx)], line_no);
            if (!(w > 0.0))
                throw ParseError("non-positive weight at line " + std::to_string(line_no));
            weights.push_back(w);
        }
    }
    if (data.empty()) throw ParseError("no data rows in " + path);

    const std::size_t rows = data.size() / value_cols.size();
    return make_sample_set(std::move(data), rows, value_cols.size(), std::move(weights));
}

bool is_precomputed_outcomes(const SampleSet& samples) { return samples.cols == 1; }

SeriesBuild build_outcome_series(std::span<const double> values, std::span<const double> weights) {
    if (values.empty()) throw DomainError("outcome series requires at least one value");
    if (values.size() != weights.size()) throw DomainError("values/weights size mismatch");

    std::vector<double> w(weights.begin(), weights.end());
    normalize_weights(w);
    for (double v : values) {
        if (!std::isfinite(v)) throw DomainError("outcome values must be finite");
    }

    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

    SeriesBuild out;
    out.merged_index.assign(values.size(), 0);
    out.series.values.reserve(values.size());
    out.series.weights.reserve(values.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        const std::size_t n = order[k];
        if (!out.series.values.empty() && values[n] == out.series.values.back()) {
            out.series.weights.back() += w[n];
        } else {
            out.series.values.push_back(values[n]);
            out.series.weights.push_back(w[n]);
        }
        out.merged_index[n] = out.series.values.size() - 1;
    }
    return out;
}

OutcomeSeries make_outcome_series(std::span<const double> values, std::span<const double> weights) {
    return build_outcome_series(values, weights).series;
}

SeriesBuild evaluate_limit_state_mapped(const LimitStateFn& g, std::span<const double> x,
                                        const SampleSet& samples) {
    std::vector<double> y(samples.rows);
    for (std::size_t n = 0; n < samples.rows; ++n) {
        double value;
        try {
            value = g(x, samples.row(n));
        } catch (const std::exception& e) {
            throw DomainError("limit-state evaluation failed on row " + std::to_string(n) + ": " +
                              e.what());
        }
        if (!std::isfinite(value))
            throw DomainError("limit-state evaluation produced a non-finite value on row " +
                              std::to_string(n));
        y[n] = value;
    }
    return build_outcome_series(y, samples.weights);
}

OutcomeSeries evaluate_limit_state(const LimitStateFn& g, std::span<const double> x,
                                   const SampleSet& samples) {
    return evaluate_limit_state_mapped(g, x, samples).series;
}

}  // namespace borm
