#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sds {

/// Per-iteration active counts of one run plus the metadata needed to
/// reproduce it.
struct Trace {
    std::vector<std::size_t> values;
    struct Meta {
        std::size_t n_agents = 0;
        double p_minus = 0.0;
        double p_m = 0.0;
        std::size_t iterations = 0;
        std::uint64_t seed = 0;
        std::string rng_algorithm;
        std::string task_kind;
    } meta;
};

struct SummaryStats {
    double mean = 0.0;
    double std = 0.0;
    std::size_t count = 0;
    std::size_t burn_in = 0;
};

// Mean and sample standard deviation (count-1 denominator) of the values
// after the burn-in cut. Requires at least two retained samples.
SummaryStats summarize(const Trace& trace, std::size_t burn_in);

// Fraction of post-burn-in samples x with |x - center| <= halfwidth.
double band_coverage(const Trace& trace, std::size_t burn_in, double center, double halfwidth);

}  // namespace sds
