#include "sds/model.hpp"

#include <cmath>
#include <stdexcept>

namespace sds {

namespace {

constexpr double kDegenerateLeading = 1e-14;

void check_probability(double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::domain_error(std::string(name) + " must lie in [0,1]");
    }
}

}  // namespace

void ModelParams::validate() const {
    if (n_agents < 1) {
        throw std::domain_error("n_agents must be >= 1");
    }
    check_probability(p_minus, "p_minus");
    check_probability(p_m, "p_m");
}

bool TransitionMatrix2::row_stochastic(double tol) const {
    for (double e : {aa, an, na, nn}) {
        if (!(e >= -tol && e <= 1.0 + tol)) return false;
    }
    return std::abs(aa + an - 1.0) <= tol && std::abs(na + nn - 1.0) <= tol;
}

TransitionMatrix2 identity_matrix() {
    return TransitionMatrix2{1.0, 0.0, 0.0, 1.0};
}

double p1_of_activity(double x, const ModelParams& params) {
    params.validate();
    if (!(x >= 0.0 && x <= 1.0)) {
        throw std::domain_error("activity fraction must lie in [0,1]");
    }
    return (1.0 - params.p_minus) * (x + (1.0 - x) * params.p_m);
}

TransitionMatrix2 transition_matrix_at(double activity_fraction, const ModelParams& params) {
    const double p1 = p1_of_activity(activity_fraction, params);
    return TransitionMatrix2{1.0 - params.p_minus, params.p_minus, p1, 1.0 - p1};
}

TransitionMatrix2 build_transition_matrix(std::size_t m, const ModelParams& params) {
    params.validate();
    if (m > params.n_agents) {
        throw std::domain_error("active count exceeds n_agents");
    }
    return transition_matrix_at(static_cast<double>(m) / static_cast<double>(params.n_agents),
                                params);
}

SteadyState steady_state(const ModelParams& params) {
    params.validate();
    const double q = params.p_minus;
    const double pm = params.p_m;

    // Flux balance pi*q = (1-pi)*(1-q)*(pi + (1-pi)*pm) rearranges to
    // a*pi^2 + b*pi + c = 0 with the coefficients below.
    const double a = (1.0 - q) * (1.0 - pm);
    const double b = q - (1.0 - q) * (1.0 - 2.0 * pm);
    const double c = -(1.0 - q) * pm;

    double pi1;
    if (pm == 0.0) {
        // Zero hit probability keeps every agent inactive.
        pi1 = 0.0;
    } else if (a < kDegenerateLeading) {
        // Leading coefficient vanished (q=1 or pm=1); the residual equation is linear.
        pi1 = (b != 0.0) ? -c / b : 0.0;
    } else {
        const double disc = b * b - 4.0 * a * c;
        const double root = (-b + std::sqrt(disc)) / (2.0 * a);
        if (root >= 0.0 && root <= 1.0) {
            pi1 = root;
        } else {
            pi1 = (-b - std::sqrt(disc)) / (2.0 * a);
        }
    }
    if (pi1 < 0.0) pi1 = 0.0;
    if (pi1 > 1.0) pi1 = 1.0;

    SteadyState s;
    const double n = static_cast<double>(params.n_agents);
    s.pi1 = pi1;
    s.pi2 = 1.0 - pi1;
    s.expected_active = n * pi1;
    s.std_active = std::sqrt(n * s.pi1 * s.pi2);
    const double t = (n + 1.0) * pi1;
    s.mode_low = t - 1.0;
    s.mode_high = t;
    long mode = static_cast<long>(std::floor(t));
    if (static_cast<double>(mode) == t) mode -= 1;  // tie between t-1 and t, take the lower
    if (mode < 0) mode = 0;
    if (mode > static_cast<long>(params.n_agents)) mode = static_cast<long>(params.n_agents);
    s.mode = mode;
    return s;
}

double stationary_pmf(const ModelParams& params, double pi1, std::size_t n) {
    params.validate();
    check_probability(pi1, "pi1");
    const std::size_t total = params.n_agents;
    if (n > total) {
        throw std::domain_error("active count exceeds n_agents");
    }
    const double k = static_cast<double>(n);
    const double nn = static_cast<double>(total);
    if (pi1 == 0.0) return n == 0 ? 1.0 : 0.0;
    if (pi1 == 1.0) return n == total ? 1.0 : 0.0;
    const double log_choose =
        std::lgamma(nn + 1.0) - std::lgamma(k + 1.0) - std::lgamma(nn - k + 1.0);
    const double log_p = log_choose + k * std::log(pi1) + (nn - k) * std::log1p(-pi1);
    return std::exp(log_p);
}

double configuration_probability(const std::vector<bool>& config, double pi1) {
    check_probability(pi1, "pi1");
    double p = 1.0;
    for (bool active : config) {
        p *= active ? pi1 : 1.0 - pi1;
    }
    return p;
}

std::vector<double> aggregate_configurations(std::size_t n, double pi1) {
    if (n > 20) {
        throw std::length_error("exhaustive enumeration limited to n <= 20");
    }
    check_probability(pi1, "pi1");
    std::vector<double> by_count(n + 1, 0.0);
    std::vector<bool> config(n);
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::size_t ones = 0;
        for (std::size_t i = 0; i < n; ++i) {
            config[i] = (bits >> i) & 1u;
            ones += config[i];
        }
        by_count[ones] += configuration_probability(config, pi1);
    }
    return by_count;
}

double ergodicity_coefficient(const TransitionMatrix2& m) {
    const double overlap = std::min(m.aa, m.na) + std::min(m.an, m.nn);
    return 1.0 - overlap;
}

std::vector<double> weak_ergodicity_partial_sums(const std::vector<std::size_t>& m_trajectory,
                                                 const ModelParams& params) {
    std::vector<double> sums;
    sums.reserve(m_trajectory.size());
    double acc = 0.0;
    for (std::size_t m : m_trajectory) {
        acc += 1.0 - ergodicity_coefficient(build_transition_matrix(m, params));
        sums.push_back(acc);
    }
    return sums;
}

MeanFieldState make_mean_field_state(double active_prob, const ModelParams& params) {
    check_probability(active_prob, "active probability");
    MeanFieldState s;
    s.activity = {active_prob, 1.0 - active_prob};
    s.matrix = transition_matrix_at(active_prob, params);
    return s;
}

MeanFieldState mean_field_map(const MeanFieldState& state, const ModelParams& params) {
    const auto& p = state.activity;
    const auto& m = state.matrix;
    double next_active = p[0] * m.aa + p[1] * m.na;
    if (next_active < 0.0) next_active = 0.0;
    if (next_active > 1.0) next_active = 1.0;
    return make_mean_field_state(next_active, params);
}

double k_distance(const MeanFieldState& a, const MeanFieldState& b) {
    const double vec_part = std::abs(a.activity[0] - b.activity[0]) +
                            std::abs(a.activity[1] - b.activity[1]);
    const double col0 = std::abs(a.matrix.aa - b.matrix.aa) + std::abs(a.matrix.na - b.matrix.na);
    const double col1 = std::abs(a.matrix.an - b.matrix.an) + std::abs(a.matrix.nn - b.matrix.nn);
    return vec_part + std::max(col0, col1);
}

FixedPointResult fixed_point_iterate(const ModelParams& params, const MeanFieldState& init,
                                     double tol, std::size_t max_iter) {
    if (!(tol > 0.0)) {
        throw std::domain_error("tol must be positive");
    }
    if (max_iter < 1) {
        throw std::domain_error("max_iter must be >= 1");
    }
    MeanFieldState current = init;
    for (std::size_t k = 1; k <= max_iter; ++k) {
        MeanFieldState next = mean_field_map(current, params);
        if (k_distance(next, current) < tol) {
            return FixedPointResult{next, k};
        }
        current = next;
    }
    throw std::runtime_error("fixed_point_iterate: no convergence within max_iter");
}

TransitionMatrix2 limit_matrix(const ModelParams& params) {
    return transition_matrix_at(steady_state(params).pi1, params);
}

TransitionMatrix2 forward_product(const std::vector<TransitionMatrix2>& matrices) {
    TransitionMatrix2 acc = identity_matrix();
    for (const auto& m : matrices) {
        TransitionMatrix2 next;
        next.aa = acc.aa * m.aa + acc.an * m.na;
        next.an = acc.aa * m.an + acc.an * m.nn;
        next.na = acc.na * m.aa + acc.nn * m.na;
        next.nn = acc.na * m.an + acc.nn * m.nn;
        acc = next;
    }
    return acc;
}

}  // namespace sds
