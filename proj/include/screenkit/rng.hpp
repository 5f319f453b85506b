#pragma once

#include <cstdint>
#include <random>

namespace screenkit {

// Seeded random generator with draw algorithms that are stable across
// platforms. The engine is std::mt19937_64 (fully specified by the C++
// standard); bounded integers use Lemire's multiply-shift rejection,
// uniform doubles take the top 53 bits of a draw, normals come from
// Box-Muller and Poisson counts from Knuth's product method. The standard
// <random> distributions are avoided on purpose: their output is
// implementation-defined and would make seeded sequences differ between
// standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi); returns lo exactly when lo == hi.
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n); n must be positive.
    std::uint64_t uniform_below(std::uint64_t n);

    bool bernoulli(double p) { return uniform() < p; }

    // Standard normal draw; the paired Box-Muller value is cached.
    double normal();
    double normal(double mean, double stddev) { return mean + stddev * normal(); }

    // Poisson count; means large enough to underflow exp(-mean) are split
    // into two half-mean draws.
    std::uint64_t poisson(double mean);

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace screenkit
