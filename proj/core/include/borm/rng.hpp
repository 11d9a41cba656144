#pragma once

#include <cstdint>
#include <random>

#include "borm/special_functions.hpp"

namespace borm {

/// Deterministic random source. All variates are produced by inverse-CDF
/// transforms of mt19937_64 output, so streams are reproducible bit-for-bit
/// for a given seed on any conforming implementation.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform draw strictly inside (0, 1).
    double uniform01() {
        const std::uint64_t bits = engine_() >> 11;  // 53 random bits
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal draw via the quantile transform.
    double standard_normal() { return std_normal_quantile(uniform01()); }

    double normal(double mean, double stddev) { return mean + stddev * standard_normal(); }

    std::uint64_t next_raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

}  // namespace borm
