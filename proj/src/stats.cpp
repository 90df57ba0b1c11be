#include "sds/stats.hpp"

#include <cmath>
#include <stdexcept>

namespace sds {

SummaryStats summarize(const Trace& trace, std::size_t burn_in) {
    const std::size_t total = trace.values.size();
    if (total < burn_in || total - burn_in < 2) {
        throw std::invalid_argument("summarize needs at least 2 post-burn-in samples");
    }
    const std::size_t count = total - burn_in;
    double sum = 0.0;
    for (std::size_t i = burn_in; i < total; ++i) {
        sum += static_cast<double>(trace.values[i]);
    }
    const double mean = sum / static_cast<double>(count);
    double ss = 0.0;
    for (std::size_t i = burn_in; i < total; ++i) {
        const double d = static_cast<double>(trace.values[i]) - mean;
        ss += d * d;
    }
    SummaryStats s;
    s.mean = mean;
    s.std = std::sqrt(ss / static_cast<double>(count - 1));
    s.count = count;
    s.burn_in = burn_in;
    return s;
}

double band_coverage(const Trace& trace, std::size_t burn_in, double center, double halfwidth) {
    if (halfwidth < 0.0) {
        throw std::invalid_argument("halfwidth must be nonnegative");
    }
    const std::size_t total = trace.values.size();
    if (total <= burn_in) {
        throw std::invalid_argument("band_coverage needs post-burn-in samples");
    }
    std::size_t inside = 0;
    for (std::size_t i = burn_in; i < total; ++i) {
        if (std::abs(static_cast<double>(trace.values[i]) - center) <= halfwidth) ++inside;
    }
    return static_cast<double>(inside) / static_cast<double>(total - burn_in);
}

}  // namespace sds
